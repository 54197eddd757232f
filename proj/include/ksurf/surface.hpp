#ifndef KSURF_SURFACE_HPP
#define KSURF_SURFACE_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ksurf
{

// Coordinates of a class in NS(X) with respect to the integral basis the
// owning surface was built with.
class DivisorClass
{
public:
    DivisorClass() = default;
    DivisorClass(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
    explicit DivisorClass(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

    static DivisorClass zero(std::size_t rho) { return DivisorClass(std::vector<std::int64_t>(rho, 0)); }

    std::size_t size() const noexcept { return coords_.size(); }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<std::int64_t> &coords() const noexcept { return coords_; }
    bool is_zero() const noexcept;

    DivisorClass &operator+=(const DivisorClass &other);
    DivisorClass &operator-=(const DivisorClass &other);
    DivisorClass &operator*=(std::int64_t k);

    friend DivisorClass operator+(DivisorClass a, const DivisorClass &b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass &b) { return a -= b; }
    friend DivisorClass operator*(std::int64_t k, DivisorClass a) { return a *= k; }
    friend DivisorClass operator-(DivisorClass a) { return a *= -1; }
    friend bool operator==(const DivisorClass &, const DivisorClass &) = default;

private:
    std::vector<std::int64_t> coords_;
};

using Gram = std::vector<std::vector<std::int64_t>>;

// Numerical model of a smooth rational surface X with an ample H and
// (K_X, H) < 0: Picard rank, intersection form on NS(X), canonical class and
// polarization. chi(O_X) is always 1.
class SurfaceModel
{
public:
    static SurfaceModel p2();
    // P^1 x P^1 polarized by O(1, n), basis of fiber classes (1,0), (0,1).
    static SurfaceModel p1xp1(std::int64_t n);
    // Validated custom model. Throws std::invalid_argument when the Gram matrix
    // is not square symmetric of size rho, H.H <= 0 or (K_X, H) >= 0.
    static SurfaceModel custom(std::size_t rho, Gram gram, DivisorClass canonical, DivisorClass polarization);

    std::size_t rho() const noexcept { return gram_.size(); }
    const Gram &gram() const noexcept { return gram_; }
    const DivisorClass &canonical() const noexcept { return canonical_; }
    const DivisorClass &polarization() const noexcept { return polarization_; }
    std::int64_t chi_o() const noexcept { return 1; }

    // Short name such as "p2" or "p1xp1(n=2)", or "custom".
    const std::string &name() const noexcept { return name_; }

    friend bool operator==(const SurfaceModel &a, const SurfaceModel &b)
    {
        return a.gram_ == b.gram_ && a.canonical_ == b.canonical_ && a.polarization_ == b.polarization_;
    }

private:
    SurfaceModel(Gram gram, DivisorClass canonical, DivisorClass polarization, std::string name);

    Gram gram_;
    DivisorClass canonical_;
    DivisorClass polarization_;
    std::string name_;
};

// d1^T . gram . d2. Throws std::invalid_argument on a length mismatch.
std::int64_t intersect(const SurfaceModel &s, const DivisorClass &d1, const DivisorClass &d2);

// Throws std::invalid_argument unless d has length rho.
void check_divisor(const SurfaceModel &s, const DivisorClass &d);

} // namespace ksurf

#endif
