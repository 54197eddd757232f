#include <ksurf/goettsche.hpp>

#include <stdexcept>

namespace ksurf
{

namespace
{

BigInt multiset_count(const BigInt &kinds, std::size_t k)
{
    // C(kinds + k - 1, k)
    BigInt acc = 1;
    for (std::size_t i = 0; i < k; ++i) {
        acc = acc * (kinds + i) / (i + 1);
    }
    return acc;
}

} // namespace

QPoly hilb_epoly(const BettiData &betti, int n)
{
    if (n < 0) {
        throw std::invalid_argument("hilb_epoly: negative n");
    }
    for (auto b : betti.b) {
        if (b < 0) {
            throw std::invalid_argument("hilb_epoly: negative Betti number");
        }
    }
    const auto N = static_cast<std::size_t>(n);
    std::vector<QPoly> series(N + 1);
    series[0] = QPoly{1};
    for (std::size_t m = 1; m <= N; ++m) {
        for (std::size_t i = 0; i < betti.b.size(); ++i) {
            if (betti.b[i] == 0) {
                continue;
            }
            const std::size_t weight = m - 1 + i;
            std::vector<QPoly> next = series;
            // Multiply by sum_{j >= 1} C(b + j - 1, j) t^(weight j) z^(m j).
            for (std::size_t j = 1; j * m <= N; ++j) {
                QPoly factor = QPoly::monomial(multiset_count(betti.b[i], j), weight * j);
                for (std::size_t deg = 0; deg + j * m <= N; ++deg) {
                    if (!series[deg].is_zero()) {
                        next[deg + j * m] += series[deg] * factor;
                    }
                }
            }
            series = std::move(next);
        }
    }
    return series[N];
}

std::int64_t rank1_colength(const SurfaceModel &s, const DivisorClass &c1, std::int64_t chi)
{
    const KClass line = twist(s, {1, DivisorClass::zero(s.rho()), 1}, c1);
    return line.chi - chi;
}

QPoly rank1_moduli_epoly(const SurfaceModel &s, const DivisorClass &c1, std::int64_t chi)
{
    const auto l = rank1_colength(s, c1, chi);
    if (l < 0) {
        return {};
    }
    return hilb_epoly(BettiData::of(s), static_cast<int>(l));
}

} // namespace ksurf
