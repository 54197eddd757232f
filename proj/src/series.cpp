#include <ksurf/series.hpp>

#include <stdexcept>
#include <string>

#include <ksurf/invariants.hpp>

namespace ksurf
{

namespace
{

std::size_t tri(int j)
{
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(j - 1) / 2;
}

QPoly signed_term(int j, QPoly term)
{
    return j % 2 == 0 ? term : -term;
}

QPoly value_or_zero(const std::map<int, QPoly> &values, int k)
{
    auto it = values.find(k);
    return it == values.end() ? QPoly{} : it->second;
}

std::string label(const SeriesSpec &spec, int k)
{
    return "e(M_H(" + format_kclass(spec.surface, series_class(spec, k)) + "))";
}

} // namespace

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::ok:
        return "ok";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::unverified_hypothesis:
        return "unverified-hypothesis";
    }
    return "fail";
}

bool SeriesResult::ok() const
{
    for (const auto &d : diagnostics) {
        if (d.status == CheckStatus::fail) {
            return false;
        }
    }
    return true;
}

KClass series_class(const SeriesSpec &spec, int k)
{
    return spec.gamma + static_cast<std::int64_t>(k) * spec.gamma0;
}

SeriesParams series_params(const SeriesSpec &spec)
{
    const auto &s = spec.surface;
    check_kclass(s, spec.gamma);
    check_kclass(s, spec.gamma0);
    if (spec.gamma0.r <= 0) {
        throw std::invalid_argument("series: gamma0 must have positive rank");
    }
    if (spec.gamma.r <= 0) {
        throw std::invalid_argument("series: gamma must have positive rank");
    }
    if (euler_pairing(s, spec.gamma0, spec.gamma0) != 1) {
        throw std::invalid_argument("series: gamma0 = " + format_kclass_csv(spec.gamma0) +
                                    " is not exceptional (chi(gamma0,gamma0) != 1)");
    }
    const auto deg = twisted_degree(s, spec.gamma0, spec.gamma);
    if (deg != 1) {
        throw std::invalid_argument("series: deg_{gamma0}(gamma) = " + std::to_string(deg) + ", expected 1");
    }
    if (spec.gamma0.r * -intersect(s, s.canonical(), s.polarization()) <= 1) {
        throw std::invalid_argument("series: rk(gamma0)(-K_X, H) must exceed 1");
    }
    SeriesParams p;
    p.a = static_cast<int>(-euler_pairing(s, spec.gamma, spec.gamma0));
    p.s = static_cast<int>(canonical_defect(s, spec.gamma0, spec.gamma));
    if (p.a < 1) {
        throw std::invalid_argument("series: a = -chi(gamma, gamma0) = " + std::to_string(p.a) + " must be >= 1");
    }
    if (p.s < 1) {
        throw std::invalid_argument("series: s = " + std::to_string(p.s) + " must be >= 1");
    }
    const KClass shifted = spec.gamma - euler_pairing(s, spec.gamma0, spec.gamma) * spec.gamma0;
    p.assumption_ok = shifted.r >= 0;
    return p;
}

QPoly zero_stratum(const SeriesSpec &spec, const std::map<int, QPoly> &values, int l)
{
    const int a = series_params(spec).a;
    QPoly acc;
    for (int j = 0; l - j >= spec.k_min; ++j) {
        auto it = values.find(l - j);
        if (it == values.end()) {
            throw std::invalid_argument("zero_stratum: missing value for k = " + std::to_string(l - j));
        }
        acc += signed_term(j, (gauss_binom(a - l + j, j) * it->second).shifted(tri(j)));
    }
    return acc;
}

QPoly reassemble(const SeriesSpec &spec, const SeriesResult &result, int k)
{
    const int a = result.params.a;
    if (k > a) {
        throw std::invalid_argument("reassemble: k = " + std::to_string(k) + " exceeds a = " + std::to_string(a));
    }
    QPoly acc;
    for (int j = 0; k - j >= spec.k_min; ++j) {
        acc += gauss_binom(a + j - k, j) * value_or_zero(result.zero_strata, k - j);
    }
    return acc;
}

QPoly relation_residual(const SeriesSpec &spec, const SeriesResult &result, int l)
{
    const auto &p = result.params;
    if (l <= p.a - p.s || l > p.a) {
        throw std::invalid_argument("relation_residual: l = " + std::to_string(l) + " outside (a-s, a]");
    }
    QPoly acc;
    for (int j = 0; l - j >= spec.k_min; ++j) {
        acc += signed_term(j, (gauss_binom(p.a - l + j, j) * value_or_zero(result.values, l - j)).shifted(tri(j)));
    }
    return acc;
}

ClosedForms closed_form_p2(const SeriesSpec &spec, const std::map<int, QPoly> &values)
{
    const auto p = series_params(spec);
    if (p.s != 3) {
        throw std::invalid_argument("closed_form_p2: needs s = 3, got s = " + std::to_string(p.s));
    }
    const QPoly two_factorial = q_factorial(2);
    ClosedForms out;
    for (int j = 0; p.a - 3 - j >= spec.k_min; ++j) {
        const QPoly &e = value_or_zero(values, p.a - 3 - j);
        const std::size_t shift = static_cast<std::size_t>(j) * static_cast<std::size_t>(j + 1) / 2;
        const QPoly c2 = exact_div(q_int(j + 3) * q_int(j + 2), two_factorial);
        const QPoly c1 = q_int(j + 3) * q_int(j + 1);
        const QPoly c0 = exact_div(q_int(j + 2) * q_int(j + 1), two_factorial);
        out.at_a_minus_2 += signed_term(j, (c2 * e).shifted(shift));
        out.at_a_minus_1 += signed_term(j, (c1 * e).shifted(shift));
        out.at_a += signed_term(j, (c0 * e).shifted(shift));
    }
    return out;
}

SeriesResult extend_series(const SeriesSpec &spec)
{
    SeriesResult result;
    result.params = series_params(spec);
    result.k_min = spec.k_min;
    const int a = result.params.a;
    const int s = result.params.s;
    const int first_unknown = a - s + 1;

    for (const auto &[k, poly] : spec.bases) {
        if (k < spec.k_min || k >= first_unknown) {
            throw std::invalid_argument("series: base at k = " + std::to_string(k) + " outside [k_min, a-s] = [" +
                                        std::to_string(spec.k_min) + ", " + std::to_string(a - s) + "]");
        }
    }
    for (int k = spec.k_min; k < first_unknown; ++k) {
        if (!spec.bases.count(k)) {
            throw std::invalid_argument("series: missing base value for k = " + std::to_string(k));
        }
    }
    result.values = spec.bases;

    for (int l = std::max(first_unknown, spec.k_min); l <= a; ++l) {
        QPoly v;
        for (int j = 1; l - j >= spec.k_min; ++j) {
            // (-1)^(j-1)
            v += signed_term(j - 1, (gauss_binom(a - l + j, j) * result.values.at(l - j)).shifted(tri(j)));
        }
        result.values[l] = std::move(v);
    }
    for (int l = spec.k_min; l <= a; ++l) {
        result.zero_strata[l] = zero_stratum(spec, result.values, l);
    }

    auto &diag = result.diagnostics;
    const auto &surface = spec.surface;
    const KClass shifted = spec.gamma - euler_pairing(surface, spec.gamma0, spec.gamma) * spec.gamma0;
    diag.push_back({"hypothesis", std::nullopt,
                    result.params.assumption_ok ? CheckStatus::ok : CheckStatus::unverified_hypothesis,
                    "rk(gamma - chi(gamma0,gamma) gamma0) = " + std::to_string(shifted.r)});
    if (!result.params.assumption_ok) {
        for (int l = std::max(first_unknown, spec.k_min); l <= a; ++l) {
            diag.push_back({"output", l, CheckStatus::unverified_hypothesis, label(spec, l)});
        }
    }

    for (int l = std::max(first_unknown, spec.k_min); l <= a; ++l) {
        const QPoly r = relation_residual(spec, result, l);
        diag.push_back({"relation_residual", l, r.is_zero() ? CheckStatus::ok : CheckStatus::fail,
                        r.is_zero() ? "0" : "residual " + r.to_string()});
    }
    for (int k = spec.k_min; k <= a; ++k) {
        const QPoly r = reassemble(spec, result, k);
        const bool same = r == result.values.at(k);
        diag.push_back(
            {"reassemble", k, same ? CheckStatus::ok : CheckStatus::fail, same ? "strata sum matches" : r.to_string()});
    }
    for (int k = spec.k_min; k <= a; ++k) {
        const KClass cls = series_class(spec, k);
        const QPoly &v = result.values.at(k);
        if (cls.r <= 0 || v.is_zero()) {
            continue;
        }
        const auto dim = moduli_dim(surface, cls);
        std::string problem;
        if (!is_palindrome(v)) {
            problem += " not palindromic;";
        }
        if (v.coeff(0) != 1) {
            problem += " constant term != 1;";
        }
        if (v.degree() != dim) {
            problem += " degree " + std::to_string(v.degree()) + " != dim " + std::to_string(dim) + ";";
        }
        diag.push_back({"structure", k, problem.empty() ? CheckStatus::ok : CheckStatus::fail,
                        problem.empty() ? "palindromic, constant term 1, degree " + std::to_string(dim)
                                        : problem.substr(1)});
    }
    if (s == 3) {
        const auto cf = closed_form_p2(spec, result.values);
        const QPoly *forms[] = {&cf.at_a_minus_2, &cf.at_a_minus_1, &cf.at_a};
        for (int i = 0; i < 3; ++i) {
            const int k = a - 2 + i;
            const QPoly v = value_or_zero(result.values, k);
            const bool same = *forms[i] == v;
            diag.push_back({"closed_form", k, same ? CheckStatus::ok : CheckStatus::fail,
                            same ? "matches solved value" : forms[i]->to_string()});
        }
    }
    for (const auto &[k, poly] : spec.expected) {
        const QPoly v = value_or_zero(result.values, k);
        const bool same = v == poly;
        diag.push_back({"expected", k, same ? CheckStatus::ok : CheckStatus::fail,
                        same ? label(spec, k) + " matches reference"
                             : label(spec, k) + ": got " + v.to_string() + ", reference " + poly.to_string()});
    }
    return result;
}

} // namespace ksurf
