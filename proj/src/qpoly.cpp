#include <ksurf/qpoly.hpp>

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ksurf
{

QPoly::QPoly(std::initializer_list<long long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) {
        coeffs_.emplace_back(c);
    }
    normalize();
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

QPoly QPoly::constant(const BigInt &c)
{
    return QPoly(std::vector<BigInt>{c});
}

QPoly QPoly::monomial(const BigInt &c, std::size_t degree)
{
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return QPoly(std::move(v));
}

void QPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

BigInt QPoly::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

QPoly QPoly::shifted(std::size_t k) const
{
    if (is_zero() || k == 0) {
        return *this;
    }
    std::vector<BigInt> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return QPoly(std::move(v));
}

BigInt QPoly::eval(const BigInt &x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

QPoly &QPoly::operator+=(const QPoly &other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    normalize();
    return *this;
}

QPoly &QPoly::operator-=(const QPoly &other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    normalize();
    return *this;
}

QPoly operator*(const QPoly &a, const QPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return QPoly(std::move(out));
}

QPoly &QPoly::operator*=(const QPoly &other)
{
    *this = *this * other;
    return *this;
}

QPoly &QPoly::operator*=(const BigInt &c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

QPoly operator-(QPoly a)
{
    for (auto &x : a.coeffs_) {
        x = -x;
    }
    return a;
}

std::string QPoly::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt &c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (c < 0) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        if (i == 0 || mag != 1) {
            os << mag;
        }
        if (i >= 1) {
            os << 't';
        }
        if (i >= 2) {
            os << '^' << i;
        }
        first = false;
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const QPoly &p)
{
    return os << p.to_string();
}

QPoly QPoly::parse(std::string_view text)
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
        }
    }
    if (s.empty()) {
        throw std::invalid_argument("empty polynomial string");
    }
    auto fail = [&](const char *what) {
        throw std::invalid_argument(std::string("malformed polynomial '") + std::string(text) + "': " + what);
    };

    std::vector<BigInt> coeffs;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            fail("expected '+' or '-' between terms");
        }
        std::size_t digits_begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            ++pos;
        }
        BigInt c = 1;
        bool have_digits = pos > digits_begin;
        if (have_digits) {
            c = BigInt(s.substr(digits_begin, pos - digits_begin));
        }
        std::size_t power = 0;
        if (pos < s.size() && s[pos] == '*') {
            if (!have_digits) {
                fail("'*' without a coefficient");
            }
            ++pos;
            if (pos >= s.size() || s[pos] != 't') {
                fail("expected 't' after '*'");
            }
        }
        if (pos < s.size() && s[pos] == 't') {
            ++pos;
            power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::size_t exp_begin = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    ++pos;
                }
                if (pos == exp_begin) {
                    fail("missing exponent after '^'");
                }
                power = std::stoul(s.substr(exp_begin, pos - exp_begin));
            }
        } else if (!have_digits) {
            fail("empty term");
        }
        if (coeffs.size() <= power) {
            coeffs.resize(power + 1);
        }
        coeffs[power] += sign * c;
    }
    return QPoly(std::move(coeffs));
}

std::pair<QPoly, QPoly> divmod(const QPoly &num, const QPoly &den)
{
    if (den.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::vector<BigInt> rem = num.coeffs();
    const auto &d = den.coeffs();
    const BigInt &lead = d.back();
    if (rem.size() < d.size()) {
        return {QPoly{}, num};
    }
    std::vector<BigInt> quot(rem.size() - d.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigInt &top = rem[k + d.size() - 1];
        if (top == 0) {
            continue;
        }
        if (top % lead != 0) {
            throw std::domain_error("polynomial division leaves a non-integral quotient");
        }
        BigInt q = top / lead;
        quot[k] = q;
        for (std::size_t j = 0; j < d.size(); ++j) {
            rem[k + j] -= q * d[j];
        }
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly exact_div(const QPoly &num, const QPoly &den)
{
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) {
        throw std::domain_error("inexact polynomial division: remainder " + r.to_string());
    }
    return q;
}

QPoly q_int(int n)
{
    if (n < 0) {
        throw std::invalid_argument("q_int: negative argument");
    }
    return QPoly(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

QPoly q_factorial(int n)
{
    if (n < 0) {
        throw std::invalid_argument("q_factorial: negative argument");
    }
    QPoly acc{1};
    for (int i = 2; i <= n; ++i) {
        acc *= q_int(i);
    }
    return acc;
}

QPoly gauss_binom(int n, int k)
{
    if (k < 0 || n < 0 || k > n) {
        return {};
    }
    return exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

QPoly gauss_alternating_sum(int n)
{
    if (n < 0) {
        throw std::invalid_argument("gauss_alternating_sum: negative argument");
    }
    QPoly acc;
    for (int j = 0; j <= n; ++j) {
        QPoly term = gauss_binom(n, j).shifted(static_cast<std::size_t>(j) * (j - 1) / 2);
        if (j % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

namespace
{

BigInt binomial(const BigInt &n, unsigned k)
{
    BigInt acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc = acc * (n - i) / (i + 1);
    }
    return acc;
}

} // namespace

QPoly symmetric_product_epoly(const QPoly &base, int n)
{
    if (n < 0) {
        throw std::invalid_argument("symmetric_product_epoly: negative n");
    }
    for (const auto &b : base.coeffs()) {
        if (b < 0) {
            throw std::invalid_argument("symmetric_product_epoly: base has a negative coefficient");
        }
    }
    const auto N = static_cast<std::size_t>(n);
    // series[m] is the coefficient of z^m, truncated at z^n.
    std::vector<QPoly> series(N + 1);
    series[0] = QPoly{1};
    for (std::size_t d = 0; d < base.coeffs().size(); ++d) {
        const BigInt &b = base.coeffs()[d];
        if (b == 0) {
            continue;
        }
        // (1 - t^d z)^(-b) = sum_m C(b+m-1, m) t^(dm) z^m
        std::vector<QPoly> factor(N + 1);
        for (std::size_t m = 0; m <= N; ++m) {
            factor[m] = QPoly::monomial(binomial(b + m - 1, static_cast<unsigned>(m)), d * m);
        }
        std::vector<QPoly> next(N + 1);
        for (std::size_t i = 0; i <= N; ++i) {
            if (series[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; i + j <= N; ++j) {
                next[i + j] += series[i] * factor[j];
            }
        }
        series = std::move(next);
    }
    return series[N];
}

bool is_palindrome(const QPoly &p)
{
    const auto &c = p.coeffs();
    return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

} // namespace ksurf
