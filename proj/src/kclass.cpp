#include <ksurf/kclass.hpp>

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ksurf
{

KClass &KClass::operator+=(const KClass &o)
{
    r += o.r;
    c1 += o.c1;
    chi += o.chi;
    return *this;
}

KClass &KClass::operator-=(const KClass &o)
{
    r -= o.r;
    c1 -= o.c1;
    chi -= o.chi;
    return *this;
}

KClass &KClass::operator*=(std::int64_t k)
{
    r *= k;
    c1 *= k;
    chi *= k;
    return *this;
}

KClass parse_kclass(std::string_view text)
{
    std::vector<std::int64_t> parts;
    std::size_t pos = 0;
    while (true) {
        while (pos < text.size() && text[pos] == ' ') {
            ++pos;
        }
        std::size_t end = text.find(',', pos);
        std::string_view field = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        while (!field.empty() && field.back() == ' ') {
            field.remove_suffix(1);
        }
        if (!field.empty() && field.front() == '+') {
            field.remove_prefix(1);
        }
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
            throw std::invalid_argument("malformed class '" + std::string(text) + "': expected integers r,c1...,chi");
        }
        parts.push_back(v);
        if (end == std::string_view::npos) {
            break;
        }
        pos = end + 1;
    }
    if (parts.size() < 3) {
        throw std::invalid_argument("malformed class '" + std::string(text) + "': need at least r,c1,chi");
    }
    KClass x;
    x.r = parts.front();
    x.chi = parts.back();
    x.c1 = DivisorClass(std::vector<std::int64_t>(parts.begin() + 1, parts.end() - 1));
    return x;
}

std::string format_kclass_csv(const KClass &x)
{
    std::ostringstream os;
    os << x.r;
    for (auto c : x.c1.coords()) {
        os << ',' << c;
    }
    os << ',' << x.chi;
    return os.str();
}

std::string format_kclass(const SurfaceModel &s, const KClass &x)
{
    std::ostringstream os;
    os << x.r << ',';
    if (s.rho() == 1 && s.polarization() == DivisorClass{1} && x.c1.size() == 1) {
        auto m = x.c1[0];
        if (m == 0) {
            os << '0';
        } else if (m == 1) {
            os << 'H';
        } else if (m == -1) {
            os << "-H";
        } else {
            os << m << 'H';
        }
    } else {
        os << '(';
        for (std::size_t i = 0; i < x.c1.size(); ++i) {
            os << (i ? "," : "") << x.c1[i];
        }
        os << ')';
    }
    os << ',' << x.chi;
    return os.str();
}

void check_kclass(const SurfaceModel &s, const KClass &x)
{
    if (x.c1.size() != s.rho()) {
        throw std::invalid_argument("class " + format_kclass_csv(x) + " has " + std::to_string(x.c1.size()) +
                                    " divisor coordinates, surface has rho = " + std::to_string(s.rho()));
    }
}

std::int64_t euler_pairing(const SurfaceModel &s, const KClass &x, const KClass &y)
{
    check_kclass(s, x);
    check_kclass(s, y);
    return x.r * y.chi + y.r * x.chi - x.r * y.r - intersect(s, x.c1, y.c1) +
           y.r * intersect(s, s.canonical(), x.c1);
}

std::int64_t symmetry_defect(const SurfaceModel &s, const KClass &x, const KClass &y)
{
    return euler_pairing(s, x, y) - euler_pairing(s, y, x);
}

KClass dual(const SurfaceModel &s, const KClass &x)
{
    check_kclass(s, x);
    return {x.r, -x.c1, x.chi + intersect(s, x.c1, s.canonical())};
}

namespace
{

std::int64_t half_exact(std::int64_t v, const char *what)
{
    if (v % 2 != 0) {
        throw std::domain_error(std::string(what) + ": D.(D-K) is odd, so the lattice is not that of a surface");
    }
    return v / 2;
}

} // namespace

KClass twist(const SurfaceModel &s, const KClass &x, const DivisorClass &d)
{
    check_kclass(s, x);
    check_divisor(s, d);
    const std::int64_t dd = intersect(s, d, d) - intersect(s, d, s.canonical());
    return {x.r, x.c1 + x.r * d, x.chi + intersect(s, x.c1, d) + x.r * half_exact(dd, "twist")};
}

KClass point_class(const SurfaceModel &s)
{
    return {0, DivisorClass::zero(s.rho()), 1};
}

KClass curve_structure_class(const SurfaceModel &s, const DivisorClass &d)
{
    check_divisor(s, d);
    const std::int64_t v = intersect(s, d, d) + intersect(s, d, s.canonical());
    return {0, d, -half_exact(v, "curve_structure_class")};
}

KClass kernel_bundle_class(const SurfaceModel &s, const KClass &e0)
{
    check_kclass(s, e0);
    if (e0.r <= 0) {
        throw std::invalid_argument("kernel_bundle_class: e0 must have positive rank");
    }
    return e0.r * e0 - point_class(s);
}

KClass reflect_left(const SurfaceModel &s, const KClass &e0, const KClass &x)
{
    return x - euler_pairing(s, x, e0) * e0;
}

KClass reflect_right(const SurfaceModel &s, const KClass &e0, const KClass &x)
{
    return x - euler_pairing(s, e0, x) * e0;
}

std::int64_t twisted_degree(const SurfaceModel &s, const KClass &e0, const KClass &x)
{
    const auto &h = s.polarization();
    return e0.r * intersect(s, x.c1, h) - x.r * intersect(s, e0.c1, h);
}

TwistedInvariants twisted_invariants(const SurfaceModel &s, const KClass &g, const KClass &x)
{
    check_kclass(s, g);
    check_kclass(s, x);
    if (g.r <= 0) {
        throw std::invalid_argument("twisted_invariants: G must have positive rank");
    }
    return {g.r * x.r, twisted_degree(s, g, x), euler_pairing(s, g, x)};
}

namespace
{

using Wide = __int128;

struct ReducedHilbert
{
    // Doubled coefficients of n -> chi(G, x(nH)), top first.
    Wide c[3];
    Wide rank;
};

ReducedHilbert reduced_hilbert(const SurfaceModel &s, const KClass &g, const KClass &x)
{
    Wide v[3];
    for (int n = 0; n < 3; ++n) {
        v[n] = euler_pairing(s, g, twist(s, x, n * s.polarization()));
    }
    const Wide top = v[2] - 2 * v[1] + v[0];
    const Wide mid = 2 * (v[1] - v[0]) - top;
    return {{top, mid, 2 * v[0]}, x.r};
}

void require_positive(const KClass &g, const KClass &x, const KClass &y, const char *what)
{
    if (g.r <= 0 || x.r <= 0 || y.r <= 0) {
        throw std::invalid_argument(std::string(what) + ": all ranks must be positive");
    }
}

std::strong_ordering compare_wide(Wide a, Wide b)
{
    return a < b ? std::strong_ordering::less : (a > b ? std::strong_ordering::greater : std::strong_ordering::equal);
}

} // namespace

std::strong_ordering twisted_order(const SurfaceModel &s, const KClass &g, const KClass &x, const KClass &y)
{
    require_positive(g, x, y, "twisted_order");
    const auto px = reduced_hilbert(s, g, x);
    const auto py = reduced_hilbert(s, g, y);
    for (int i = 0; i < 3; ++i) {
        auto cmp = compare_wide(px.c[i] * py.rank, py.c[i] * px.rank);
        if (cmp != 0) {
            return cmp;
        }
    }
    return std::strong_ordering::equal;
}

std::strong_ordering mu_order(const SurfaceModel &s, const KClass &g, const KClass &x, const KClass &y)
{
    require_positive(g, x, y, "mu_order");
    return compare_wide(Wide(twisted_degree(s, g, x)) * y.r, Wide(twisted_degree(s, g, y)) * x.r);
}

} // namespace ksurf
