#ifndef KSURF_INVARIANTS_HPP
#define KSURF_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <ksurf/kclass.hpp>
#include <ksurf/surface.hpp>

namespace ksurf
{

// A surface together with the class of a stable exceptional bundle E0:
// chi(e0, e0) = 1 and rk e0 >= 1.
class ExceptionalPair
{
public:
    // Throws std::invalid_argument when e0 is not numerically exceptional.
    ExceptionalPair(SurfaceModel surface, KClass e0);

    const SurfaceModel &surface() const noexcept { return surface_; }
    const KClass &e0() const noexcept { return e0_; }
    std::int64_t rk() const noexcept { return e0_.r; }

private:
    SurfaceModel surface_;
    KClass e0_;
};

// Dimension 1 - chi(e, e) of the coarse moduli space M_H(e).
std::int64_t moduli_dim(const SurfaceModel &s, const KClass &e);

// Stack dimension -chi(e, e) = 2 r a rk(E0) - r^2 of the mu-semistable stack
// of class r e0 - a omega. Requires r >= 1.
std::int64_t stack_dim_mu_ss(const ExceptionalPair &pair, std::int64_t r, std::int64_t a);

enum class Existence
{
    exists,
    empty,
};

std::string_view to_string(Existence e);

// mu-stable sheaves of class r e0 - a omega exist iff a rk(E0) >= r, or
// (r, a) = (1, 0) which is E0 itself. Negative a is always empty.
Existence mu_stable_exists(const ExceptionalPair &pair, std::int64_t r, std::int64_t a);

// Lower bound n^2 + (r rk(E0) - 1)(a + p) on the codimension of the locus of
// sheaves with an E0^n quotient of colength a and double-dual colength p.
std::int64_t codim_bound(const ExceptionalPair &pair, std::int64_t n, std::int64_t r, std::int64_t a,
                         std::int64_t p);

// dim Quot^a of a locally free sheaf of rank rk_l: (rk_l + 1) a.
std::int64_t quot_dim(std::int64_t rk_l, std::int64_t a);

// dim Syst(E0^n, gamma) = dim M_H(gamma) - n (n - chi(e0, gamma)).
std::int64_t syst_dim(const ExceptionalPair &pair, const KClass &gamma, std::int64_t n);

struct GrBundle
{
    // Fibre Gr(fibre_n, fibre_k) of k-planes in an N-space; only set in the
    // direct case rk gamma >= n rk e0.
    std::optional<std::int64_t> fibre_n;
    std::optional<std::int64_t> fibre_k;
    // Direct case: gamma - n e0. Dual case: n e0^v - gamma^v.
    KClass base;
    bool dual = false;
};

GrBundle gr_bundle_params(const ExceptionalPair &pair, const KClass &gamma, std::int64_t n);

struct FiberCheck
{
    std::int64_t k = 0;
    std::int64_t s = 0;
    // moduli_dim(e) - moduli_dim(L_{e0}(e))
    std::int64_t dim_drop = 0;
    // k (s - k) = dim Gr(s, k)
    std::int64_t grassmannian_dim = 0;
    bool consistent = false;
};

// s = -(K_X, rk(e0) c1(e) - rk(e) c1(e0)).
std::int64_t canonical_defect(const SurfaceModel &s, const KClass &e0, const KClass &e);

// For k = -chi(e, e0) with 0 < k <= s, checks that M_H(e) -> M_H(L_{e0}(e))
// drops dimension by dim Gr(s, k). Throws std::invalid_argument otherwise.
FiberCheck birational_fiber_check(const ExceptionalPair &pair, const KClass &e);

// Integral basis of e^perp = {x : chi(e, x) = 0}, Hermite-normalized.
std::vector<KClass> perp_basis(const SurfaceModel &s, const KClass &e);

// alpha_e = -(rk e) O_H + chi(e, O_H) C_P. Requires rk e > 0.
KClass alpha_class(const SurfaceModel &s, const KClass &e);

// beta_e = R_{e0}(alpha_{L_{e0}(e)}). Requires rk e > 0.
KClass beta_class(const ExceptionalPair &pair, const KClass &e);

struct NefRays
{
    KClass alpha;
    KClass beta;
    // Claimed boundary rays only when E0 = O_X, rk e > 0 and chi(e, e0) < 0.
    bool applicable = false;
};

NefRays nef_rays(const ExceptionalPair &pair, const KClass &e);

} // namespace ksurf

#endif
