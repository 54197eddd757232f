#include <ksurf/invariants.hpp>

#include <stdexcept>
#include <string>

#include <ksurf/lattice.hpp>

namespace ksurf
{

ExceptionalPair::ExceptionalPair(SurfaceModel surface, KClass e0) : surface_(std::move(surface)), e0_(std::move(e0))
{
    check_kclass(surface_, e0_);
    if (e0_.r < 1) {
        throw std::invalid_argument("exceptional class " + format_kclass_csv(e0_) + " must have rank >= 1");
    }
    if (euler_pairing(surface_, e0_, e0_) != 1) {
        throw std::invalid_argument("class " + format_kclass_csv(e0_) + " is not exceptional: chi(e0,e0) = " +
                                    std::to_string(euler_pairing(surface_, e0_, e0_)));
    }
}

std::int64_t moduli_dim(const SurfaceModel &s, const KClass &e)
{
    return 1 - euler_pairing(s, e, e);
}

std::int64_t stack_dim_mu_ss(const ExceptionalPair &pair, std::int64_t r, std::int64_t a)
{
    if (r < 1) {
        throw std::invalid_argument("stack_dim_mu_ss: r must be >= 1");
    }
    return 2 * r * a * pair.rk() - r * r;
}

std::string_view to_string(Existence e)
{
    return e == Existence::exists ? "exists" : "empty";
}

Existence mu_stable_exists(const ExceptionalPair &pair, std::int64_t r, std::int64_t a)
{
    if (r < 1) {
        throw std::invalid_argument("mu_stable_exists: r must be >= 1");
    }
    if (a < 0) {
        return Existence::empty;
    }
    if ((r == 1 && a == 0) || r <= a * pair.rk()) {
        return Existence::exists;
    }
    return Existence::empty;
}

std::int64_t codim_bound(const ExceptionalPair &pair, std::int64_t n, std::int64_t r, std::int64_t a,
                         std::int64_t p)
{
    if (n < 0 || r < 0 || a < 0 || p < 0) {
        throw std::invalid_argument("codim_bound: arguments must be nonnegative");
    }
    return n * n + (r * pair.rk() - 1) * (a + p);
}

std::int64_t quot_dim(std::int64_t rk_l, std::int64_t a)
{
    if (rk_l < 1 || a < 0) {
        throw std::invalid_argument("quot_dim: need rk >= 1 and a >= 0");
    }
    return (rk_l + 1) * a;
}

std::int64_t syst_dim(const ExceptionalPair &pair, const KClass &gamma, std::int64_t n)
{
    if (n < 0) {
        throw std::invalid_argument("syst_dim: n must be nonnegative");
    }
    const auto &s = pair.surface();
    return moduli_dim(s, gamma) - n * (n - euler_pairing(s, pair.e0(), gamma));
}

GrBundle gr_bundle_params(const ExceptionalPair &pair, const KClass &gamma, std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("gr_bundle_params: n must be >= 1");
    }
    const auto &s = pair.surface();
    const auto &e0 = pair.e0();
    GrBundle out;
    if (gamma.r >= n * e0.r) {
        const std::int64_t m = -euler_pairing(s, gamma, e0);
        out.fibre_n = m + n;
        out.fibre_k = n;
        out.base = gamma - n * e0;
    } else {
        out.dual = true;
        out.base = n * dual(s, e0) - dual(s, gamma);
    }
    return out;
}

std::int64_t canonical_defect(const SurfaceModel &s, const KClass &e0, const KClass &e)
{
    return -intersect(s, s.canonical(), e0.r * e.c1 - e.r * e0.c1);
}

FiberCheck birational_fiber_check(const ExceptionalPair &pair, const KClass &e)
{
    const auto &s = pair.surface();
    const auto &e0 = pair.e0();
    FiberCheck out;
    out.k = -euler_pairing(s, e, e0);
    out.s = canonical_defect(s, e0, e);
    if (out.k <= 0 || out.k > out.s) {
        throw std::invalid_argument("birational_fiber_check: need 0 > chi(e, e0) = -k >= -s, got k = " +
                                    std::to_string(out.k) + ", s = " + std::to_string(out.s));
    }
    out.dim_drop = moduli_dim(s, e) - moduli_dim(s, reflect_left(s, e0, e));
    out.grassmannian_dim = out.k * (out.s - out.k);
    out.consistent = out.dim_drop == out.grassmannian_dim;
    return out;
}

std::vector<KClass> perp_basis(const SurfaceModel &s, const KClass &e)
{
    check_kclass(s, e);
    if (e.r == 0 && e.chi == 0 && e.c1.is_zero()) {
        throw std::invalid_argument("perp_basis: zero class");
    }
    const std::size_t rho = s.rho();
    // x -> chi(e, x) in the coordinates (r, c1_1..c1_rho, chi).
    IntVector functional(rho + 2, 0);
    functional[0] = e.chi - e.r + intersect(s, s.canonical(), e.c1);
    for (std::size_t i = 0; i < rho; ++i) {
        std::vector<std::int64_t> coords(rho, 0);
        coords[i] = 1;
        functional[1 + i] = -intersect(s, e.c1, DivisorClass(coords));
    }
    functional[rho + 1] = e.r;

    std::vector<KClass> out;
    for (const auto &row : integer_kernel({functional}, rho + 2)) {
        out.push_back({row.front(), DivisorClass(std::vector<std::int64_t>(row.begin() + 1, row.end() - 1)),
                       row.back()});
    }
    return out;
}

namespace
{

KClass alpha_unchecked(const SurfaceModel &s, const KClass &e)
{
    const KClass o_h = curve_structure_class(s, s.polarization());
    return -e.r * o_h + euler_pairing(s, e, o_h) * point_class(s);
}

} // namespace

KClass alpha_class(const SurfaceModel &s, const KClass &e)
{
    check_kclass(s, e);
    if (e.r <= 0) {
        throw std::invalid_argument("alpha_class: rank must be positive");
    }
    return alpha_unchecked(s, e);
}

KClass beta_class(const ExceptionalPair &pair, const KClass &e)
{
    const auto &s = pair.surface();
    check_kclass(s, e);
    if (e.r <= 0) {
        throw std::invalid_argument("beta_class: rank must be positive");
    }
    return reflect_right(s, pair.e0(), alpha_unchecked(s, reflect_left(s, pair.e0(), e)));
}

NefRays nef_rays(const ExceptionalPair &pair, const KClass &e)
{
    const auto &s = pair.surface();
    NefRays out{alpha_class(s, e), beta_class(pair, e), false};
    const KClass structure_sheaf{1, DivisorClass::zero(s.rho()), 1};
    out.applicable = pair.e0() == structure_sheaf && e.r > 0 && euler_pairing(s, e, pair.e0()) < 0;
    return out;
}

} // namespace ksurf
