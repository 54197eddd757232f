#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <random>

#include <ksurf/kclass.hpp>
#include <ksurf/oracles.hpp>
#include <ksurf/surface.hpp>

using namespace ksurf;

namespace
{

KClass k(const char *s)
{
    return parse_kclass(s);
}

KClass random_class(std::mt19937_64 &rng, std::size_t rho, int bound = 8)
{
    std::uniform_int_distribution<std::int64_t> d(-bound, bound);
    std::vector<std::int64_t> c(rho);
    for (auto &x : c) {
        x = d(rng);
    }
    return {d(rng), DivisorClass(std::move(c)), d(rng)};
}

std::vector<SurfaceModel> presets()
{
    return {SurfaceModel::p2(), SurfaceModel::p1xp1(1), SurfaceModel::p1xp1(2), SurfaceModel::p1xp1(4)};
}

} // namespace

TEST_CASE("presets")
{
    const auto p2 = SurfaceModel::p2();
    CHECK(intersect(p2, p2.canonical(), p2.polarization()) == -3);
    CHECK(intersect(p2, p2.polarization(), p2.polarization()) == 1);
    CHECK(intersect(p2, p2.canonical(), p2.canonical()) == 9);
    CHECK(p2.chi_o() == 1);

    const auto q1 = SurfaceModel::p1xp1(1);
    CHECK(intersect(q1, q1.canonical(), q1.polarization()) == -4);
    CHECK(q1.chi_o() == 1);
    const auto q2 = SurfaceModel::p1xp1(2);
    CHECK(intersect(q2, q2.polarization(), q2.polarization()) == 4);
    CHECK_THROWS_AS(SurfaceModel::p1xp1(0), std::invalid_argument);
    CHECK_THROWS_AS(SurfaceModel::p1xp1(-2), std::invalid_argument);
}

TEST_CASE("intersections on P1xP1")
{
    for (std::int64_t n = 1; n <= 5; ++n) {
        const auto s = SurfaceModel::p1xp1(n);
        const DivisorClass l{-1, n + 1};
        CHECK(intersect(s, l, s.polarization()) == 1);
        CHECK(intersect(s, l, -s.canonical()) == 2 * n);
    }
    CHECK_THROWS_AS(intersect(SurfaceModel::p2(), DivisorClass{1, 0}, DivisorClass{1}), std::invalid_argument);
}

TEST_CASE("custom surfaces")
{
    CHECK(SurfaceModel::custom(1, {{1}}, DivisorClass{-3}, DivisorClass{1}) == SurfaceModel::p2());
    CHECK(SurfaceModel::custom(1, {{1}}, DivisorClass{-3}, DivisorClass{1}).name() == "p2");
    CHECK_NOTHROW(SurfaceModel::custom(2, {{0, 1}, {1, 0}}, DivisorClass{-2, -2}, DivisorClass{1, 1}));
    CHECK_THROWS_AS(SurfaceModel::custom(1, {{1}}, DivisorClass{3}, DivisorClass{1}), std::invalid_argument);
    CHECK_THROWS_AS(SurfaceModel::custom(2, {{0, 1}, {2, 0}}, DivisorClass{-2, -2}, DivisorClass{1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(SurfaceModel::custom(2, {{0, 1}}, DivisorClass{-2, -2}, DivisorClass{1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(SurfaceModel::custom(1, {{1}}, DivisorClass{-3, 0}, DivisorClass{1}), std::invalid_argument);
    // H not ample numerically: H.H = 0.
    CHECK_THROWS_AS(SurfaceModel::custom(2, {{0, 1}, {1, 0}}, DivisorClass{-2, -2}, DivisorClass{1, 0}),
                    std::invalid_argument);
}

TEST_CASE("class parsing and formatting")
{
    const auto p2 = SurfaceModel::p2();
    CHECK(k("9,-4,-1") == KClass{9, DivisorClass{-4}, -1});
    CHECK(format_kclass(p2, k("9,-4,-1")) == "9,-4H,-1");
    CHECK(format_kclass(p2, k("1,0,1")) == "1,0,1");
    CHECK(format_kclass(p2, k("2,1,0")) == "2,H,0");
    CHECK(format_kclass_csv(k("3,-1,2")) == "3,-1,2");
    CHECK(format_kclass(SurfaceModel::p1xp1(1), k("2,-1,2,0")) == "2,(-1,2),0");
    CHECK(k(" 1 , -1 , 3 , 0 ") == KClass{1, DivisorClass{-1, 3}, 0});
    CHECK_THROWS_AS(k("1,0"), std::invalid_argument);
    CHECK_THROWS_AS(k("1,a,0"), std::invalid_argument);
    CHECK_THROWS_AS(k(""), std::invalid_argument);
    CHECK_THROWS_AS(check_kclass(p2, k("1,0,0,1")), std::invalid_argument);
}

TEST_CASE("euler pairing examples")
{
    const auto p2 = SurfaceModel::p2();
    CHECK(euler_pairing(p2, k("1,0,1"), k("1,0,1")) == 1);
    CHECK(euler_pairing(p2, k("2,-1,0"), k("2,-1,0")) == 1);
    CHECK(euler_pairing(p2, k("1,0,-1"), k("2,-1,0")) == -4);
    // chi(O, O(d)) = (d+1)(d+2)/2
    for (std::int64_t d = -4; d <= 4; ++d) {
        const KClass od = twist(p2, k("1,0,1"), DivisorClass{d});
        CHECK(od.chi == (d + 1) * (d + 2) / 2);
        CHECK(euler_pairing(p2, k("1,0,1"), od) == od.chi);
    }
}

TEST_CASE("symmetry defect examples")
{
    const auto p2 = SurfaceModel::p2();
    CHECK(symmetry_defect(p2, k("1,1,3"), k("1,1,3")) == 0);
    CHECK(symmetry_defect(p2, k("1,1,3"), k("1,0,1")) == -3);
    const auto q = SurfaceModel::p1xp1(1);
    for (std::int64_t chi = -3; chi <= 3; ++chi) {
        CHECK(symmetry_defect(q, KClass{1, DivisorClass{1, 1}, chi}, k("1,0,0,1")) == -4);
    }
}

TEST_CASE("dual, twist, point and curve classes")
{
    const auto p2 = SurfaceModel::p2();
    CHECK(dual(p2, k("3,1,2")) == k("3,-1,-1"));
    CHECK(dual(p2, k("1,0,1")) == k("1,0,1"));
    CHECK(twist(p2, k("1,0,1"), DivisorClass{1}) == k("1,1,3"));
    CHECK(point_class(p2) == k("0,0,1"));
    CHECK(dual(p2, point_class(p2)) == point_class(p2));
    CHECK(curve_structure_class(p2, DivisorClass{1}) == k("0,1,1"));
    // O_{2H}: chi(O) - chi(O(-2)) = 1 - 0.
    CHECK(curve_structure_class(p2, DivisorClass{2}) == k("0,2,1"));
    CHECK(curve_structure_class(p2, DivisorClass{2}) ==
          k("1,0,1") - twist(p2, k("1,0,1"), DivisorClass{-2}));
    const auto q = SurfaceModel::p1xp1(1);
    CHECK(curve_structure_class(q, DivisorClass{1, 0}) == KClass{0, DivisorClass{1, 0}, 1});
    for (std::int64_t n = 1; n <= 4; ++n) {
        const auto s = SurfaceModel::p1xp1(n);
        CHECK(twist(s, k("1,0,0,1"), DivisorClass{-1, n + 1}) == KClass{1, DivisorClass{-1, n + 1}, 0});
    }
}

TEST_CASE("kernel bundle class")
{
    const auto p2 = SurfaceModel::p2();
    CHECK(kernel_bundle_class(p2, k("1,0,1")) == k("1,0,0"));
    CHECK(kernel_bundle_class(p2, k("2,-1,0")) == k("4,-2,-1"));
    for (const char *e0 : {"1,0,1", "2,-1,0", "1,1,3", "2,1,3"}) {
        CHECK(euler_pairing(p2, k(e0), kernel_bundle_class(p2, k(e0))) == 0);
    }
    CHECK_THROWS_AS(kernel_bundle_class(p2, k("0,1,1")), std::invalid_argument);
}

TEST_CASE("reflections")
{
    const auto p2 = SurfaceModel::p2();
    const KClass o = k("1,0,1");
    CHECK(reflect_left(p2, o, o) == KClass::zero(1));
    CHECK(reflect_right(p2, o, o) == KClass::zero(1));
    for (std::int64_t r = -3; r <= 5; ++r) {
        for (std::int64_t chi = -3; chi <= 3; ++chi) {
            CHECK(reflect_right(p2, o, KClass{r, DivisorClass{0}, chi}) == KClass{r - chi, DivisorClass{0}, 0});
        }
    }
    CHECK(reflect_left(p2, o, k("1,1,3")) == k("1,1,3"));
}

TEST_CASE("twisted invariants and orderings")
{
    const auto p2 = SurfaceModel::p2();
    const KClass g = k("2,-1,0");
    CHECK(twisted_invariants(p2, g, g).deg == 0);
    CHECK(twisted_degree(p2, g, k("1,0,-1")) == 1);
    CHECK(twisted_degree(p2, k("1,0,1"), k("3,0,5")) == 0);
    CHECK_THROWS_AS(twisted_invariants(p2, k("0,1,1"), g), std::invalid_argument);

    const KClass o = k("1,0,1");
    CHECK(twisted_order(p2, o, k("2,1,1"), k("2,1,1")) == std::strong_ordering::equal);
    CHECK(twisted_order(p2, o, k("1,1,3"), o) == std::strong_ordering::greater);
    CHECK(twisted_order(p2, o, o, k("1,0,0")) == std::strong_ordering::greater);
    CHECK(mu_order(p2, o, o, k("1,0,0")) == std::strong_ordering::equal);
    CHECK(mu_order(p2, o, k("2,1,0"), k("1,0,0")) == std::strong_ordering::greater);
    CHECK_THROWS_AS(twisted_order(p2, o, k("0,1,1"), o), std::invalid_argument);
}

TEST_CASE("twisted order is a total preorder consistent with reduced Hilbert polynomials")
{
    std::mt19937_64 rng(11);
    for (const auto &s : presets()) {
        for (int i = 0; i < 300; ++i) {
            KClass g = random_class(rng, s.rho(), 3);
            g.r = 1 + std::abs(g.r);
            std::vector<KClass> xs;
            for (int j = 0; j < 3; ++j) {
                KClass x = random_class(rng, s.rho(), 6);
                x.r = 1 + std::abs(x.r);
                xs.push_back(x);
            }
            const auto a = twisted_order(s, g, xs[0], xs[1]);
            const auto b = twisted_order(s, g, xs[1], xs[2]);
            CHECK(twisted_order(s, g, xs[1], xs[0]) == (0 <=> a));
            if (a <= 0 && b <= 0) {
                CHECK(twisted_order(s, g, xs[0], xs[2]) <= 0);
            }
            // Scaling a class does not change its reduced polynomial.
            CHECK(twisted_order(s, g, xs[0], 3 * xs[0]) == std::strong_ordering::equal);
            // For large n the sign of the difference of reduced polynomials agrees.
            const auto reduced = [&](const KClass &x, std::int64_t n) {
                const KClass xn = twist(s, x, n * s.polarization());
                return static_cast<long double>(euler_pairing(s, g, xn)) / static_cast<long double>(x.r);
            };
            const std::int64_t n = 2000;
            const long double diff = reduced(xs[0], n) - reduced(xs[1], n);
            if (a == std::strong_ordering::greater) {
                CHECK(diff > 0);
            } else if (a == std::strong_ordering::less) {
                CHECK(diff < 0);
            }
        }
    }
}

TEST_CASE("pairing properties on random classes")
{
    std::mt19937_64 rng(3);
    for (const auto &s : presets()) {
        const KClass o{1, DivisorClass::zero(s.rho()), 1};
        for (int i = 0; i < 2000; ++i) {
            const KClass x = random_class(rng, s.rho()), y = random_class(rng, s.rho()),
                         z = random_class(rng, s.rho()), e0 = random_class(rng, s.rho());
            std::uniform_int_distribution<std::int64_t> d(-3, 3);
            const std::int64_t a = d(rng), b = d(rng);
            // Bilinearity in each slot.
            CHECK(euler_pairing(s, a * x + b * y, z) == a * euler_pairing(s, x, z) + b * euler_pairing(s, y, z));
            CHECK(euler_pairing(s, z, a * x + b * y) == a * euler_pairing(s, z, x) + b * euler_pairing(s, z, y));
            CHECK(euler_pairing(s, x, y) == oracle::chern_character_pairing(s, x, y));
            CHECK(symmetry_defect(s, x, y) == intersect(s, s.canonical(), y.r * x.c1 - x.r * y.c1));
            CHECK(euler_pairing(s, x, reflect_right(s, e0, y)) == euler_pairing(s, reflect_left(s, e0, x), y));
            // Serre duality: chi(x, y) = chi(y, x (x) K).
            CHECK(euler_pairing(s, x, y) == euler_pairing(s, y, twist(s, x, s.canonical())));
            CHECK(dual(s, dual(s, x)) == x);
            CHECK(euler_pairing(s, o, x) == x.chi);
            CHECK(euler_pairing(s, x, point_class(s)) == x.r);
            CHECK(euler_pairing(s, point_class(s), x) == x.r);
            // chi(x, y) = chi(dual y, dual x)
            CHECK(euler_pairing(s, x, y) == euler_pairing(s, dual(s, y), dual(s, x)));
        }
    }
}

TEST_CASE("twisting respects the pairing and composes")
{
    std::mt19937_64 rng(5);
    for (const auto &s : presets()) {
        for (int i = 0; i < 500; ++i) {
            const KClass x = random_class(rng, s.rho()), y = random_class(rng, s.rho());
            DivisorClass d1 = random_class(rng, s.rho(), 3).c1, d2 = random_class(rng, s.rho(), 3).c1;
            // D.(D-K) is always even on these lattices.
            CHECK(twist(s, twist(s, x, d1), d2) == twist(s, x, d1 + d2));
            CHECK(twist(s, x, DivisorClass::zero(s.rho())) == x);
            CHECK(euler_pairing(s, twist(s, x, d1), twist(s, y, d1)) == euler_pairing(s, x, y));
        }
    }
}

TEST_CASE("twist rejects an odd D.(D-K)")
{
    const auto odd = SurfaceModel::custom(1, {{1}}, DivisorClass{-2}, DivisorClass{1});
    CHECK_THROWS_AS(twist(odd, KClass{1, DivisorClass{0}, 1}, DivisorClass{1}), std::domain_error);
}
