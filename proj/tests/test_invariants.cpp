#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <random>

#include <ksurf/invariants.hpp>

using namespace ksurf;

namespace
{

KClass k(const char *s)
{
    return parse_kclass(s);
}

const SurfaceModel p2 = SurfaceModel::p2();
const KClass o = KClass{1, DivisorClass{0}, 1};
const KClass omega1 = KClass{2, DivisorClass{-1}, 0};

} // namespace

TEST_CASE("exceptional pairs")
{
    CHECK_NOTHROW(ExceptionalPair(p2, o));
    CHECK_NOTHROW(ExceptionalPair(p2, omega1));
    CHECK_THROWS_AS(ExceptionalPair(p2, k("2,0,2")), std::invalid_argument);
    CHECK_THROWS_AS(ExceptionalPair(p2, k("0,1,1")), std::invalid_argument);
    CHECK_THROWS_AS(ExceptionalPair(p2, k("-1,0,-1")), std::invalid_argument);
}

TEST_CASE("moduli and stack dimensions")
{
    CHECK(moduli_dim(p2, k("2,1,1")) == 8);
    CHECK(moduli_dim(p2, k("9,-4,-1")) == 8);
    CHECK(moduli_dim(p2, k("1,0,1")) == 0);
    CHECK(moduli_dim(p2, k("1,1,0")) == 6);

    const ExceptionalPair po(p2, o), pw(p2, omega1);
    CHECK(stack_dim_mu_ss(po, 1, 1) == 1);
    CHECK(stack_dim_mu_ss(pw, 1, 1) == 3);
    CHECK(stack_dim_mu_ss(po, 1, 0) == -1);
    for (std::int64_t r = 1; r <= 4; ++r) {
        for (std::int64_t a = 0; a <= 4; ++a) {
            for (const auto *p : {&po, &pw}) {
                const KClass cls = r * p->e0() - a * point_class(p2);
                CHECK(stack_dim_mu_ss(*p, r, a) == -euler_pairing(p2, cls, cls));
            }
        }
    }
    CHECK_THROWS_AS(stack_dim_mu_ss(po, 0, 1), std::invalid_argument);
}

TEST_CASE("moduli dimension is invariant under duality and twisting")
{
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::int64_t> d(-7, 7);
    for (int i = 0; i < 500; ++i) {
        const KClass e{d(rng), DivisorClass{d(rng)}, d(rng)};
        CHECK(moduli_dim(p2, dual(p2, e)) == moduli_dim(p2, e));
        CHECK(moduli_dim(p2, twist(p2, e, DivisorClass{d(rng)})) == moduli_dim(p2, e));
    }
}

TEST_CASE("mu-stable existence")
{
    const ExceptionalPair po(p2, o), pw(p2, omega1);
    CHECK(mu_stable_exists(po, 2, 1) == Existence::empty);
    CHECK(mu_stable_exists(po, 2, 2) == Existence::exists);
    CHECK(mu_stable_exists(po, 1, 0) == Existence::exists);
    CHECK(mu_stable_exists(pw, 1, 0) == Existence::exists);
    CHECK(mu_stable_exists(po, 1, -1) == Existence::empty);
    CHECK(to_string(Existence::exists) == "exists");
    // Monotone in a.
    for (std::int64_t r = 1; r <= 5; ++r) {
        for (std::int64_t a = 1; a <= 5; ++a) {
            for (const auto *p : {&po, &pw}) {
                if (mu_stable_exists(*p, r, a) == Existence::exists) {
                    CHECK(mu_stable_exists(*p, r, a + 1) == Existence::exists);
                }
            }
        }
    }
}

TEST_CASE("codimension, quot and system dimensions")
{
    const ExceptionalPair po(p2, o), pw(p2, omega1);
    CHECK(codim_bound(po, 1, 2, 0, 0) == 1);
    CHECK(codim_bound(pw, 1, 1, 0, 0) == 1);
    CHECK(codim_bound(po, 0, 3, 2, 1) == 6);
    CHECK(codim_bound(po, 2, 2, 1, 0) == 5);
    CHECK(codim_bound(pw, 2, 1, 0, 1) == 5);

    CHECK(quot_dim(1, 4) == 8);
    CHECK(quot_dim(3, 0) == 0);
    CHECK(quot_dim(3, 2) == 8);

    const KClass g = k("2,1,1");
    CHECK(syst_dim(po, g, 0) == moduli_dim(p2, g));
    CHECK(euler_pairing(p2, o, g) == 1);
    CHECK(syst_dim(po, g, 1) == 8);
    CHECK(syst_dim(po, g, 2) == 8 - 2);
    CHECK_THROWS_AS(syst_dim(po, g, -1), std::invalid_argument);
}

TEST_CASE("grassmannian bundle parameters")
{
    for (std::int64_t n0 = 1; n0 <= 4; ++n0) {
        const auto s = SurfaceModel::p1xp1(n0);
        const ExceptionalPair po(s, KClass{1, DivisorClass{0, 0}, 1});
        const DivisorClass l{-1, n0 + 1};
        for (std::int64_t r = 1; r <= 2 * n0; ++r) {
            const KClass g{1 + r, l, r};
            const auto gb = gr_bundle_params(po, g, r);
            CHECK_FALSE(gb.dual);
            CHECK(gb.fibre_n == 2 * n0);
            CHECK(gb.fibre_k == r);
            CHECK(gb.base == KClass{1, l, 0});
            CHECK(moduli_dim(s, gb.base) + r * (2 * n0 - r) == moduli_dim(s, g));
        }
    }
    const ExceptionalPair po(p2, o);
    // rank 1 < 2 copies of O: dual side.
    const auto dual_case = gr_bundle_params(po, k("1,1,0"), 2);
    CHECK(dual_case.dual);
    CHECK_FALSE(dual_case.fibre_n.has_value());
    CHECK(dual_case.base == 2 * dual(p2, o) - dual(p2, k("1,1,0")));
    // m = -chi(gamma, e0) = 0 gives point fibres.
    const KClass g0 = k("2,1,3");
    REQUIRE(euler_pairing(p2, g0, o) == 0);
    const auto pt = gr_bundle_params(po, g0, 1);
    CHECK(pt.fibre_n == 1);
    CHECK(pt.fibre_k == 1);
}

TEST_CASE("birational fibre check")
{
    const ExceptionalPair po(p2, o);
    const auto fc = birational_fiber_check(po, k("1,1,2"));
    CHECK(fc.k == 1);
    CHECK(fc.s == 3);
    CHECK(fc.dim_drop == 2);
    CHECK(fc.grassmannian_dim == 2);
    CHECK(fc.consistent);

    // k = s: birational.
    const auto bir = birational_fiber_check(po, k("1,1,0"));
    CHECK(bir.k == 3);
    CHECK(bir.s == 3);
    CHECK(bir.dim_drop == 0);
    CHECK(bir.consistent);

    for (std::int64_t n = 1; n <= 4; ++n) {
        const auto s = SurfaceModel::p1xp1(n);
        const ExceptionalPair ps(s, KClass{1, DivisorClass{0, 0}, 1});
        const auto f = birational_fiber_check(ps, KClass{1, DivisorClass{-1, n + 1}, 2 * n - 1});
        CHECK(f.k == 1);
        CHECK(f.s == 2 * n);
        CHECK(f.dim_drop == 2 * n - 1);
        CHECK(f.consistent);
    }
    CHECK_THROWS_AS(birational_fiber_check(po, k("1,1,3")), std::invalid_argument);
    CHECK_THROWS_AS(birational_fiber_check(po, k("1,1,-1")), std::invalid_argument);
}

TEST_CASE("fibre check holds whenever it applies")
{
    const ExceptionalPair pairs[] = {ExceptionalPair(p2, o), ExceptionalPair(p2, omega1),
                                     ExceptionalPair(p2, k("1,1,3")), ExceptionalPair(p2, k("2,1,3"))};
    for (const auto &p : pairs) {
        for (std::int64_t r = -4; r <= 6; ++r) {
            for (std::int64_t c = -4; c <= 4; ++c) {
                for (std::int64_t chi = -6; chi <= 6; ++chi) {
                    const KClass e{r, DivisorClass{c}, chi};
                    const std::int64_t kk = -euler_pairing(p2, e, p.e0());
                    const std::int64_t s = canonical_defect(p2, p.e0(), e);
                    if (kk > 0 && kk <= s) {
                        CHECK(birational_fiber_check(p, e).consistent);
                    }
                }
            }
        }
    }
}

TEST_CASE("perp basis")
{
    const auto b = perp_basis(p2, o);
    CHECK(b == std::vector<KClass>{k("1,0,0"), k("0,1,0")});
    CHECK(perp_basis(p2, k("2,1,1")).size() == 2);
    CHECK_THROWS_AS(perp_basis(p2, KClass::zero(1)), std::invalid_argument);
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<std::int64_t> d(-6, 6);
    for (const auto &s : {SurfaceModel::p2(), SurfaceModel::p1xp1(2)}) {
        for (int i = 0; i < 200; ++i) {
            std::vector<std::int64_t> c(s.rho());
            for (auto &x : c) {
                x = d(rng);
            }
            const KClass e{d(rng), DivisorClass(c), d(rng)};
            for (const auto &x : perp_basis(s, e)) {
                CHECK(euler_pairing(s, e, x) == 0);
            }
        }
    }
}

TEST_CASE("alpha and beta classes")
{
    const ExceptionalPair po(p2, o);
    CHECK(alpha_class(p2, k("2,1,1")) == k("0,-2,-1"));
    CHECK(alpha_class(p2, o) == k("0,-1,0"));
    CHECK_THROWS_AS(alpha_class(p2, k("0,1,1")), std::invalid_argument);
    // Pinned regression value.
    CHECK(beta_class(po, k("2,1,1")) == k("1,-4,0"));

    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::int64_t> d(-6, 6), rk(1, 8);
    const ExceptionalPair pairs[] = {po, ExceptionalPair(p2, omega1)};
    for (const auto &p : pairs) {
        for (int i = 0; i < 300; ++i) {
            const KClass e{rk(rng), DivisorClass{d(rng)}, d(rng)};
            CHECK(euler_pairing(p2, e, alpha_class(p2, e)) == 0);
            const KClass et = reflect_left(p2, p.e0(), e);
            if (et.r > 0) {
                CHECK(euler_pairing(p2, e, beta_class(p, e)) == 0);
            }
            // With chi(e, e0) = 0 beta is R_{e0}(alpha_e).
            if (euler_pairing(p2, e, p.e0()) == 0) {
                const KClass diff = beta_class(p, e) - alpha_class(p2, e);
                CHECK(diff == -euler_pairing(p2, p.e0(), alpha_class(p2, e)) * p.e0());
            }
        }
    }
}

TEST_CASE("nef rays")
{
    const ExceptionalPair po(p2, o), pw(p2, omega1);
    const KClass e = k("2,1,0");
    REQUIRE(euler_pairing(p2, e, o) < 0);
    CHECK(nef_rays(po, e).applicable);
    CHECK(nef_rays(po, e).alpha == alpha_class(p2, e));
    CHECK_FALSE(nef_rays(pw, k("2,1,0")).applicable);
    const KClass e0chi = k("2,1,3");
    REQUIRE(euler_pairing(p2, e0chi, o) == 0);
    CHECK_FALSE(nef_rays(po, e0chi).applicable);
}
