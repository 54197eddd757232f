#include <ksurf/strata.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ksurf
{

std::int64_t StratumType::rank_sum() const
{
    std::int64_t acc = 0;
    for (const auto &p : parts) {
        acc += p.n * p.r;
    }
    return acc;
}

std::string StratumType::to_string() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        os << (i ? ";" : "") << '(' << parts[i].r << ',' << parts[i].a << ',' << parts[i].n << ')';
    }
    os << "} l=" << l;
    return os.str();
}

bool is_valid_stratum(std::int64_t rk_e0, std::int64_t a, std::int64_t r, const StratumType &st)
{
    if (st.l < 0) {
        return false;
    }
    std::int64_t a_used = 0;
    for (std::size_t i = 0; i < st.parts.size(); ++i) {
        const auto &p = st.parts[i];
        if (p.r < 1 || p.a < 0 || p.n < 1 || p.a * rk_e0 < p.r) {
            return false;
        }
        if (i > 0) {
            const auto &q = st.parts[i - 1];
            if (std::tie(q.r, q.a) >= std::tie(p.r, p.a)) {
                return false;
            }
        }
        a_used += p.n * p.a;
    }
    return st.l + a_used == a && st.rank_sum() <= r;
}

namespace
{

struct Candidate
{
    std::int64_t r;
    std::int64_t a;
};

void descend(const std::vector<Candidate> &cands, std::size_t next, std::int64_t a_left, std::int64_t r_left,
             std::vector<StratumPart> &parts, std::vector<StratumType> &out)
{
    if (next == cands.size()) {
        out.push_back({parts, a_left});
        return;
    }
    descend(cands, next + 1, a_left, r_left, parts, out);
    const auto &c = cands[next];
    for (std::int64_t n = 1; n * c.a <= a_left && n * c.r <= r_left; ++n) {
        parts.push_back({c.r, c.a, n});
        descend(cands, next + 1, a_left - n * c.a, r_left - n * c.r, parts, out);
        parts.pop_back();
    }
}

} // namespace

StrataEnumeration enumerate_strata(std::int64_t rk_e0, std::int64_t a, std::int64_t r)
{
    if (rk_e0 < 1 || a < 0 || r < 1) {
        throw std::invalid_argument("enumerate_strata: need rk(e0) >= 1, a >= 0, r >= 1");
    }
    StrataEnumeration out;
    out.rk_e0 = rk_e0;
    out.a = a;
    out.r = r;
    out.bn_index = a * rk_e0 - r;
    out.hypothesis_ok = r * rk_e0 >= 2;

    std::vector<Candidate> cands;
    for (std::int64_t ri = 1; ri <= r; ++ri) {
        for (std::int64_t ai = 1; ai <= a; ++ai) {
            if (ai * rk_e0 >= ri) {
                cands.push_back({ri, ai});
            }
        }
    }
    std::vector<StratumPart> parts;
    descend(cands, 0, a, r, parts, out.strata);
    std::sort(out.strata.begin(), out.strata.end(), [](const StratumType &x, const StratumType &y) {
        const auto rx = x.rank_sum(), ry = y.rank_sum();
        if (rx != ry) {
            return rx < ry;
        }
        return x < y;
    });
    return out;
}

StrataEnumeration enumerate_strata(const ExceptionalPair &pair, std::int64_t a, std::int64_t r)
{
    return enumerate_strata(pair.rk(), a, r);
}

std::int64_t stratum_dim(std::int64_t rk_e0, const StratumType &st)
{
    std::int64_t acc = 2 * st.l;
    for (const auto &p : st.parts) {
        acc += p.n * (2 * p.r * p.a * rk_e0 - p.r * p.r + 1);
    }
    return acc;
}

std::int64_t hom_dim(std::int64_t rk_e0, const StratumType &st, std::int64_t a)
{
    return a * rk_e0 - st.rank_sum();
}

} // namespace ksurf
