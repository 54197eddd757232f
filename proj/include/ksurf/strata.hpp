#ifndef KSURF_STRATA_HPP
#define KSURF_STRATA_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <ksurf/invariants.hpp>

namespace ksurf
{

// n copies of a mu-stable bundle of class r e0 - a omega.
struct StratumPart
{
    std::int64_t r = 0;
    std::int64_t a = 0;
    std::int64_t n = 0;

    friend auto operator<=>(const StratumPart &, const StratumPart &) = default;
};

// prod_i S^{n_i} M_H(r_i e0 - a_i omega)^{mu-s,loc} x S^l X. Parts are kept
// sorted by (r, a) and the pairs (r_i, a_i) are distinct.
struct StratumType
{
    std::vector<StratumPart> parts;
    std::int64_t l = 0;

    std::int64_t rank_sum() const;
    std::string to_string() const;

    friend auto operator<=>(const StratumType &, const StratumType &) = default;
};

struct StrataEnumeration
{
    std::int64_t rk_e0 = 1;
    std::int64_t a = 0;
    std::int64_t r = 0;
    // n = a rk(e0) - r, the Brill-Noether index of the image.
    std::int64_t bn_index = 0;
    // r rk(e0) >= 2, needed for the normality statement.
    bool hypothesis_ok = false;
    std::vector<StratumType> strata;
};

// True iff st satisfies a_i rk(e0) >= r_i, distinct sorted (r_i, a_i),
// positive n_i, l + sum n_i a_i = a and sum n_i r_i <= r.
bool is_valid_stratum(std::int64_t rk_e0, std::int64_t a, std::int64_t r, const StratumType &st);

// Every stratum type for the image of the contraction of class
// r' e0 - a omega, r = a rk(e0) - n. Sorted by sum n_i r_i, then
// lexicographically. Throws std::invalid_argument for a < 0, r < 1 or
// rk_e0 < 1.
StrataEnumeration enumerate_strata(std::int64_t rk_e0, std::int64_t a, std::int64_t r);
StrataEnumeration enumerate_strata(const ExceptionalPair &pair, std::int64_t a, std::int64_t r);

// sum n_i (2 r_i a_i rk(e0) - r_i^2 + 1) + 2 l
std::int64_t stratum_dim(std::int64_t rk_e0, const StratumType &st);

// dim Hom(F, E0) = a rk(e0) - sum n_i r_i on the stratum.
std::int64_t hom_dim(std::int64_t rk_e0, const StratumType &st, std::int64_t a);

} // namespace ksurf

#endif
