#include <ksurf/oracles.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace ksurf::oracle
{

std::int64_t chern_character_pairing(const SurfaceModel &s, const KClass &x, const KClass &y)
{
    const auto &k = s.canonical();
    const auto doubled_ch2 = [&](const KClass &v) { return 2 * v.chi - 2 * v.r + intersect(s, v.c1, k); };
    const DivisorClass linear = x.r * y.c1 - y.r * x.c1;
    const std::int64_t twice = x.r * doubled_ch2(y) + y.r * doubled_ch2(x) - 2 * intersect(s, x.c1, y.c1) -
                               intersect(s, linear, k) + 2 * x.r * y.r;
    if (twice % 2 != 0) {
        throw std::logic_error("chern_character_pairing: odd doubled value");
    }
    return twice / 2;
}

QPoly pascal_gauss_binom(int n, int k)
{
    if (k < 0 || n < 0 || k > n) {
        return {};
    }
    std::vector<std::vector<QPoly>> row(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        row[m].resize(static_cast<std::size_t>(m) + 1);
        row[m][0] = QPoly{1};
        row[m][m] = QPoly{1};
        for (int j = 1; j < m; ++j) {
            row[m][j] = row[m - 1][j - 1] + row[m - 1][j].shifted(static_cast<std::size_t>(j));
        }
    }
    return row[n][k];
}

namespace
{

// Sums t^(weight) over all multisets of items whose sizes add up to `target`.
// items[i] = (size, weight); multisets are enumerated as nondecreasing index
// sequences.
QPoly multiset_sum(const std::vector<std::pair<int, int>> &items, int target)
{
    std::vector<BigInt> acc;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t start, int left, int weight) {
        if (left == 0) {
            if (acc.size() <= static_cast<std::size_t>(weight)) {
                acc.resize(static_cast<std::size_t>(weight) + 1);
            }
            acc[static_cast<std::size_t>(weight)] += 1;
            return;
        }
        for (std::size_t i = start; i < items.size(); ++i) {
            if (items[i].first <= left) {
                rec(i, left - items[i].first, weight + items[i].second);
            }
        }
    };
    rec(0, target, 0);
    return QPoly(std::move(acc));
}

} // namespace

QPoly hilb_by_coloured_partitions(const BettiData &betti, int n)
{
    std::vector<std::pair<int, int>> items;
    for (int m = 1; m <= n; ++m) {
        for (std::size_t i = 0; i < betti.b.size(); ++i) {
            for (std::int64_t copy = 0; copy < betti.b[i]; ++copy) {
                items.emplace_back(m, m - 1 + static_cast<int>(i));
            }
        }
    }
    return multiset_sum(items, n);
}

QPoly symmetric_product_by_multisets(const QPoly &base, int n)
{
    std::vector<std::pair<int, int>> items;
    for (std::size_t d = 0; d < base.coeffs().size(); ++d) {
        const auto count = static_cast<long>(base.coeffs()[d]);
        for (long c = 0; c < count; ++c) {
            items.emplace_back(1, static_cast<int>(d));
        }
    }
    return multiset_sum(items, n);
}

std::vector<StratumType> brute_force_strata(std::int64_t rk_e0, std::int64_t a, std::int64_t r)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> grid;
    for (std::int64_t ri = 1; ri <= r; ++ri) {
        for (std::int64_t ai = 0; ai <= a; ++ai) {
            grid.emplace_back(ri, ai);
        }
    }
    std::vector<StratumType> out;
    std::vector<std::size_t> seq;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> mult;
        for (auto idx : seq) {
            ++mult[grid[idx]];
        }
        StratumType st;
        std::int64_t a_sum = 0, r_sum = 0;
        bool ok = true;
        for (const auto &[pair, n] : mult) {
            st.parts.push_back({pair.first, pair.second, n});
            a_sum += n * pair.second;
            r_sum += n * pair.first;
            ok = ok && pair.second * rk_e0 >= pair.first && n <= a;
        }
        st.l = a - a_sum;
        if (ok && st.l >= 0 && r_sum <= r) {
            out.push_back(std::move(st));
        }
        if (seq.size() == static_cast<std::size_t>(r)) {
            return;
        }
        for (std::size_t i = start; i < grid.size(); ++i) {
            seq.push_back(i);
            rec(i);
            seq.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ksurf::oracle
