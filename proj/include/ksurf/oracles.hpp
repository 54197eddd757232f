#ifndef KSURF_ORACLES_HPP
#define KSURF_ORACLES_HPP

// Slow, independent reference computations. Each one takes a different route
// from the library code it is used to check.

#include <cstdint>
#include <vector>

#include <ksurf/goettsche.hpp>
#include <ksurf/kclass.hpp>
#include <ksurf/qpoly.hpp>
#include <ksurf/strata.hpp>
#include <ksurf/surface.hpp>

namespace ksurf::oracle
{

// chi(x, y) = int ch(x^v) ch(y) td(X) with ch_2 = chi - r + (c1.K)/2 kept as
// a doubled integer.
std::int64_t chern_character_pairing(const SurfaceModel &s, const KClass &x, const KClass &y);

// Gaussian binomial from the Pascal recurrence
//   [n, k] = [n-1, k-1] + t^k [n-1, k].
QPoly pascal_gauss_binom(int n, int k);

// e(Hilb^n) by summing over partitions of n with every part of size m
// coloured by a cohomology class of degree 2i (weight t^(m-1+i)).
QPoly hilb_by_coloured_partitions(const BettiData &betti, int n);

// Coefficient of z^n in prod_d (1 - t^d z)^(-b_d), by enumerating multisets
// of basis classes directly.
QPoly symmetric_product_by_multisets(const QPoly &base, int n);

// Every multiset of pairs (r_i, a_i) with 1 <= r_i <= r, 0 <= a_i <= a and
// at most r elements, collapsed to multiplicities and filtered by the
// stratum constraints. Sorted with operator< on StratumType.
std::vector<StratumType> brute_force_strata(std::int64_t rk_e0, std::int64_t a, std::int64_t r);

} // namespace ksurf::oracle

#endif
