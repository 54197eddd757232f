#ifndef KSURF_SERIES_HPP
#define KSURF_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <ksurf/kclass.hpp>
#include <ksurf/qpoly.hpp>
#include <ksurf/surface.hpp>

namespace ksurf
{

// One recursion problem along gamma + k gamma0.
//
// gamma0 is numerically exceptional and deg_{gamma0}(gamma) = 1. With
// a = -chi(gamma, gamma0) and s = -(K_X, c1(gamma0^v (x) gamma)) the engine
// needs e(M_H(gamma + k gamma0)) for k_min <= k <= a - s; everything below
// k_min is empty. The values for a - s < k <= a then follow from the vanishing
// of the Brill-Noether zero strata.
struct SeriesSpec
{
    SurfaceModel surface = SurfaceModel::p2();
    KClass gamma;
    KClass gamma0;
    int k_min = 0;
    std::map<int, QPoly> bases;
    // Optional reference rows checked against the solved values.
    std::map<int, QPoly> expected;
    std::string name;
};

struct SeriesParams
{
    int a = 0;
    int s = 0;
    // rk(gamma - chi(gamma0, gamma) gamma0) >= 0
    bool assumption_ok = false;
};

// Validates the numerical hypotheses (exceptional gamma0, twisted degree 1,
// rk(gamma0)(-K_X.H) > 1, a >= 1, s >= 1) and returns a, s and whether the
// rank assumption used for the zero strata holds. Throws std::invalid_argument.
SeriesParams series_params(const SeriesSpec &spec);

// gamma + k gamma0
KClass series_class(const SeriesSpec &spec, int k);

enum class CheckStatus
{
    ok,
    fail,
    unverified_hypothesis,
};

std::string to_string(CheckStatus s);

struct Diagnostic
{
    std::string check;
    std::optional<int> index;
    CheckStatus status = CheckStatus::ok;
    std::string detail;
};

struct SeriesResult
{
    SeriesParams params;
    int k_min = 0;
    // k -> e(M_H(gamma + k gamma0)) for k_min <= k <= a.
    std::map<int, QPoly> values;
    // l -> e(M_H(gamma + l gamma0)_0), the locus with Hom(E0, E) = 0.
    std::map<int, QPoly> zero_strata;
    std::vector<Diagnostic> diagnostics;

    bool ok() const;
};

// e(M_H(gamma + l gamma0)_0) by inclusion-exclusion over the Brill-Noether
// strata:
//   sum_{j >= 0} (-1)^j t^{j(j-1)/2} gauss_binom(a - l + j, j) values[l - j],
// with values below k_min taken as zero. Throws std::invalid_argument when a
// value in [k_min, l] is missing.
QPoly zero_stratum(const SeriesSpec &spec, const std::map<int, QPoly> &values, int l);

// Solves the vanishing relations for a - s < l <= a in ascending l (each has
// exactly one unknown with coefficient 1), then recomputes every zero stratum
// and records residual, reassembly, structural, closed-form and expected-row
// checks in the diagnostics.
SeriesResult extend_series(const SeriesSpec &spec);

// sum_{j >= 0} gauss_binom(a + j - k, j) zero_strata[k - j]; equals values[k]
// whenever the stratification is consistent. Throws for k > a.
QPoly reassemble(const SeriesSpec &spec, const SeriesResult &result, int k);

// The full alternating relation at top index l over result.values. Zero for
// consistent data. Throws unless a - s < l <= a.
QPoly relation_residual(const SeriesSpec &spec, const SeriesResult &result, int l);

struct ClosedForms
{
    QPoly at_a_minus_2;
    QPoly at_a_minus_1;
    QPoly at_a;
};

// The three top values of a series with s = 3, written directly in terms of
// values[k] for k <= a - 3:
//   e_{a-2} = sum_j (-1)^j t^{j(j+1)/2} [j+3][j+2]/[2]! e_{a-3-j}
//   e_{a-1} = sum_j (-1)^j t^{j(j+1)/2} [j+3][j+1]      e_{a-3-j}
//   e_a     = sum_j (-1)^j t^{j(j+1)/2} [j+2][j+1]/[2]! e_{a-3-j}
// Throws std::invalid_argument unless s = 3.
ClosedForms closed_form_p2(const SeriesSpec &spec, const std::map<int, QPoly> &values);

} // namespace ksurf

#endif
