#include <ksurf/surface.hpp>

#include <stdexcept>

namespace ksurf
{

bool DivisorClass::is_zero() const noexcept
{
    for (auto c : coords_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

DivisorClass &DivisorClass::operator+=(const DivisorClass &other)
{
    if (other.size() != size()) {
        throw std::invalid_argument("divisor classes of different lengths");
    }
    for (std::size_t i = 0; i < size(); ++i) {
        coords_[i] += other.coords_[i];
    }
    return *this;
}

DivisorClass &DivisorClass::operator-=(const DivisorClass &other)
{
    if (other.size() != size()) {
        throw std::invalid_argument("divisor classes of different lengths");
    }
    for (std::size_t i = 0; i < size(); ++i) {
        coords_[i] -= other.coords_[i];
    }
    return *this;
}

DivisorClass &DivisorClass::operator*=(std::int64_t k)
{
    for (auto &c : coords_) {
        c *= k;
    }
    return *this;
}

SurfaceModel::SurfaceModel(Gram gram, DivisorClass canonical, DivisorClass polarization, std::string name)
    : gram_(std::move(gram)), canonical_(std::move(canonical)), polarization_(std::move(polarization)),
      name_(std::move(name))
{
}

SurfaceModel SurfaceModel::p2()
{
    return SurfaceModel({{1}}, DivisorClass{-3}, DivisorClass{1}, "p2");
}

SurfaceModel SurfaceModel::p1xp1(std::int64_t n)
{
    if (n <= 0) {
        throw std::invalid_argument("p1xp1: polarization O(1,n) needs n >= 1");
    }
    return SurfaceModel({{0, 1}, {1, 0}}, DivisorClass{-2, -2}, DivisorClass{1, n},
                        "p1xp1(n=" + std::to_string(n) + ")");
}

SurfaceModel SurfaceModel::custom(std::size_t rho, Gram gram, DivisorClass canonical, DivisorClass polarization)
{
    if (rho == 0) {
        throw std::invalid_argument("custom surface: rho must be positive");
    }
    if (gram.size() != rho) {
        throw std::invalid_argument("custom surface: gram must have rho rows");
    }
    for (const auto &row : gram) {
        if (row.size() != rho) {
            throw std::invalid_argument("custom surface: gram must be square");
        }
    }
    for (std::size_t i = 0; i < rho; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (gram[i][j] != gram[j][i]) {
                throw std::invalid_argument("custom surface: gram is not symmetric");
            }
        }
    }
    if (canonical.size() != rho || polarization.size() != rho) {
        throw std::invalid_argument("custom surface: K_X and H must have length rho");
    }
    SurfaceModel s(std::move(gram), std::move(canonical), std::move(polarization), "custom");
    if (intersect(s, s.polarization_, s.polarization_) <= 0) {
        throw std::invalid_argument("custom surface: H.H must be positive");
    }
    if (intersect(s, s.canonical_, s.polarization_) >= 0) {
        throw std::invalid_argument("custom surface: (K_X, H) must be negative");
    }
    if (s == p2()) {
        s.name_ = "p2";
    }
    return s;
}

void check_divisor(const SurfaceModel &s, const DivisorClass &d)
{
    if (d.size() != s.rho()) {
        throw std::invalid_argument("divisor has " + std::to_string(d.size()) + " coordinates, surface has rho = " +
                                    std::to_string(s.rho()));
    }
}

std::int64_t intersect(const SurfaceModel &s, const DivisorClass &d1, const DivisorClass &d2)
{
    check_divisor(s, d1);
    check_divisor(s, d2);
    const auto &g = s.gram();
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < s.rho(); ++i) {
        if (d1[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < s.rho(); ++j) {
            acc += d1[i] * g[i][j] * d2[j];
        }
    }
    return acc;
}

} // namespace ksurf
