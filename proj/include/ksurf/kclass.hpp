#ifndef KSURF_KCLASS_HPP
#define KSURF_KCLASS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <ksurf/surface.hpp>

namespace ksurf
{

// A class in K(X) through its numerical image (rank, c_1, chi). Rank may be
// zero or negative: recursion chains and the boundary classes need both.
struct KClass
{
    std::int64_t r = 0;
    DivisorClass c1;
    std::int64_t chi = 0;

    static KClass zero(std::size_t rho) { return {0, DivisorClass::zero(rho), 0}; }

    KClass &operator+=(const KClass &o);
    KClass &operator-=(const KClass &o);
    KClass &operator*=(std::int64_t k);

    friend KClass operator+(KClass a, const KClass &b) { return a += b; }
    friend KClass operator-(KClass a, const KClass &b) { return a -= b; }
    friend KClass operator*(std::int64_t k, KClass a) { return a *= k; }
    friend KClass operator-(KClass a) { return a *= -1; }
    friend bool operator==(const KClass &, const KClass &) = default;
};

// Parses the comma syntax "r,c1_1,...,c1_rho,chi".
KClass parse_kclass(std::string_view text);
// "r,c1...,chi"; inverse of parse_kclass.
std::string format_kclass_csv(const KClass &x);
// Human form: on a Picard-rank-one surface polarized by the generator the
// divisor is written as a multiple of H, e.g. "9,-4H,-1".
std::string format_kclass(const SurfaceModel &s, const KClass &x);

void check_kclass(const SurfaceModel &s, const KClass &x);

// chi(x, y) = r_x chi_y + r_y chi_x - r_x r_y - (c_x . c_y) + r_y (K_X . c_x).
std::int64_t euler_pairing(const SurfaceModel &s, const KClass &x, const KClass &y);

// chi(x, y) - chi(y, x), which equals (K_X, r_y c_x - r_x c_y).
std::int64_t symmetry_defect(const SurfaceModel &s, const KClass &x, const KClass &y);

// Class of the derived dual: (r, -c1, chi + c1.K_X).
KClass dual(const SurfaceModel &s, const KClass &x);

// x tensor O(D). Throws std::domain_error when D.(D-K) is odd.
KClass twist(const SurfaceModel &s, const KClass &x, const DivisorClass &d);

// omega, the class of a skyscraper sheaf C_P.
KClass point_class(const SurfaceModel &s);

// Class of O_D for a curve class D.
KClass curve_structure_class(const SurfaceModel &s, const DivisorClass &d);

// rk(e0) e0 - omega, the class of the kernel of E0^v (x) E0 -> O_Delta
// restricted to a point. Requires r(e0) > 0.
KClass kernel_bundle_class(const SurfaceModel &s, const KClass &e0);

// L_{e0}(x) = x - chi(x, e0) e0 and R_{e0}(x) = x - chi(e0, x) e0.
KClass reflect_left(const SurfaceModel &s, const KClass &e0, const KClass &x);
KClass reflect_right(const SurfaceModel &s, const KClass &e0, const KClass &x);

struct TwistedInvariants
{
    std::int64_t rk = 0;
    std::int64_t deg = 0;
    std::int64_t chi = 0;

    friend bool operator==(const TwistedInvariants &, const TwistedInvariants &) = default;
};

// G-twisted rank, degree and Euler characteristic of x. Requires r(G) > 0.
TwistedInvariants twisted_invariants(const SurfaceModel &s, const KClass &g, const KClass &x);

// deg_{e0}(x) = rk(e0)(c_x.H) - rk(x)(c_{e0}.H), with no sign condition on ranks.
std::int64_t twisted_degree(const SurfaceModel &s, const KClass &e0, const KClass &x);

// Compares n -> chi_G(x(nH)) / rk_G(x) against the same for y for n >> 0,
// i.e. the reduced G-twisted Hilbert polynomials, lexicographically from the
// top coefficient. All ranks must be positive.
std::strong_ordering twisted_order(const SurfaceModel &s, const KClass &g, const KClass &x, const KClass &y);

// Slope-only comparison deg_G / rk_G (mu-stability).
std::strong_ordering mu_order(const SurfaceModel &s, const KClass &g, const KClass &x, const KClass &y);

} // namespace ksurf

#endif
