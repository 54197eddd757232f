#ifndef KSURF_QPOLY_HPP
#define KSURF_QPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ksurf
{

using BigInt = boost::multiprecision::cpp_int;

// Dense polynomial in t with arbitrary-precision integer coefficients,
// stored in ascending degree. The zero polynomial has no coefficients and
// the last stored coefficient is never zero.
class QPoly
{
public:
    QPoly() = default;
    QPoly(std::initializer_list<long long> coeffs);
    explicit QPoly(std::vector<BigInt> coeffs);

    static QPoly constant(const BigInt &c);
    static QPoly monomial(const BigInt &c, std::size_t degree);

    // Accepts the human form produced by to_string(): "1+2t+5t^2", "-t^3",
    // "0". Whitespace and an optional '*' between coefficient and t are
    // tolerated.
    static QPoly parse(std::string_view text);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<BigInt> &coeffs() const noexcept { return coeffs_; }
    BigInt coeff(std::size_t i) const;

    // Multiplication by t^k.
    QPoly shifted(std::size_t k) const;
    BigInt eval(const BigInt &x) const;
    std::string to_string() const;

    QPoly &operator+=(const QPoly &other);
    QPoly &operator-=(const QPoly &other);
    QPoly &operator*=(const QPoly &other);
    QPoly &operator*=(const BigInt &c);

    friend QPoly operator+(QPoly a, const QPoly &b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly &b) { return a -= b; }
    friend QPoly operator*(const QPoly &a, const QPoly &b);
    friend QPoly operator*(QPoly a, const BigInt &c) { return a *= c; }
    friend QPoly operator*(const BigInt &c, QPoly a) { return a *= c; }
    friend QPoly operator-(QPoly a);
    friend bool operator==(const QPoly &a, const QPoly &b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const QPoly &p);

// Long division over Z. Throws std::domain_error if a leading coefficient of
// the running remainder is not divisible by the divisor's leading
// coefficient, or if the divisor is zero.
std::pair<QPoly, QPoly> divmod(const QPoly &num, const QPoly &den);

// Exact quotient; throws std::domain_error on a nonzero remainder.
QPoly exact_div(const QPoly &num, const QPoly &den);

// [n] = 1 + t + ... + t^(n-1); [0] = 0.
QPoly q_int(int n);
// [n]! = [n][n-1]...[1]; [0]! = 1.
QPoly q_factorial(int n);
// Gaussian binomial [n]!/([k]![n-k]!); zero outside 0 <= k <= n.
QPoly gauss_binom(int n, int k);
// sum_{j=0}^{n} (-1)^j t^{j(j-1)/2} gauss_binom(n, j). Equals 1 at n = 0 and
// vanishes for n >= 1.
QPoly gauss_alternating_sum(int n);

// Coefficient of z^n in prod_d (1 - t^d z)^(-b_d), where base = sum_d b_d t^d.
// Requires nonnegative coefficients in base.
QPoly symmetric_product_epoly(const QPoly &base, int n);

bool is_palindrome(const QPoly &p);

} // namespace ksurf

#endif
