#ifndef KSURF_GOETTSCHE_HPP
#define KSURF_GOETTSCHE_HPP

#include <cstdint>
#include <vector>

#include <ksurf/kclass.hpp>
#include <ksurf/qpoly.hpp>
#include <ksurf/surface.hpp>

namespace ksurf
{

// Even Betti numbers (b_0, b_2, b_4) of a surface with no odd cohomology.
struct BettiData
{
    std::vector<std::int64_t> b;

    static BettiData p2() { return {{1, 1, 1}}; }
    static BettiData p1xp1() { return {{1, 2, 1}}; }
    // A rational surface of Picard rank rho has (1, rho, 1).
    static BettiData of(const SurfaceModel &s) { return {{1, static_cast<std::int64_t>(s.rho()), 1}}; }
};

// E-polynomial (t = xy) of Hilb^n of the surface: the coefficient of z^n in
//   prod_{m >= 1} prod_i (1 - t^(m-1+i) z^m)^(-b_{2i}).
QPoly hilb_epoly(const BettiData &betti, int n);

// Colength l = chi(O(c1)) - chi of the ideal-sheaf description
// M_H(1, c1, chi) = Hilb^l(X).
std::int64_t rank1_colength(const SurfaceModel &s, const DivisorClass &c1, std::int64_t chi);

// e(M_H(1, c1, chi)); zero when the colength is negative (empty moduli).
QPoly rank1_moduli_epoly(const SurfaceModel &s, const DivisorClass &c1, std::int64_t chi);

} // namespace ksurf

#endif
