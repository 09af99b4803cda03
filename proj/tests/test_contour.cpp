#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "zetalab/contour.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/verify.hpp"

using namespace zetalab;

TEST_CASE("elementary windings") {
    const cplx i(0.0, 1.0);
    CHECK(winding_number([&](cplx s) { return (s - i) * (s - i) * (s - i); }, 0.0, 2.0) == 3);
    CHECK(winding_number([](cplx s) { return std::exp(s); }, 0.0, 3.0) == 0);
    CHECK(winding_number([](cplx s) { return std::sin(s); }, 0.0, 1.0) == 1);
    CHECK(winding_number([](cplx s) { return std::sin(s); }, 0.0, 4.0) == 3);
    CHECK(winding_number([](cplx s) { return 1.0 / s; }, 0.0, 1.0) == -1);
}

TEST_CASE("contour failures") {
    CHECK_THROWS_AS(winding_number([](cplx s) { return s - 1.0; }, 0.0, 1.0), ZeroOnContour);
    CHECK_THROWS_AS(winding_number([](cplx s) { return s; }, 0.0, -1.0), BadInput);
    CHECK_THROWS_AS(winding_polygon([](cplx s) { return s; }, {0.0, 1.0}), BadInput);
}

TEST_CASE("scan bookkeeping") {
    const ContourScan scan = scan_circle([](cplx s) { return s * s; }, 0.0, 2.0);
    CHECK(std::abs(scan.total_phase - 4.0 * std::numbers::pi) < 1e-9);
    CHECK(std::abs(scan.min_modulus - 4.0) < 1e-12);
    CHECK(std::abs(scan.max_modulus - 4.0) < 1e-12);
    CHECK(winding_from_scan(scan) == 2);
}

TEST_CASE("property: polynomial windings count enclosed roots") {
    gen::Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        const cplx c = gen::in_box(rng, -1, 1, -1, 1);
        const double r = gen::uniform(rng, 0.3, 2.0);
        const gen::Polynomial p = gen::polynomial(rng, gen::integer(rng, 1, 8), c, r);
        CHECK(winding_number(p, c, r) == p.roots_within(c, r));
    }
}

TEST_CASE("property: windings of a product add") {
    gen::Rng rng(42);
    for (int i = 0; i < 30; ++i) {
        const double r = gen::uniform(rng, 0.5, 1.5);
        const gen::Polynomial p = gen::polynomial(rng, gen::integer(rng, 1, 5), 0.0, r);
        const gen::Polynomial q = gen::polynomial(rng, gen::integer(rng, 1, 5), 0.0, r);
        const int both = winding_number([&](cplx s) { return p(s) * q(s); }, 0.0, r);
        CHECK(both == winding_number(p, 0.0, r) + winding_number(q, 0.0, r));
    }
}

TEST_CASE("property: windings add across a chord") {
    gen::Rng rng(43);
    for (int i = 0; i < 30; ++i) {
        const Rect r{-2.0, 2.0, -2.0, 2.0};
        const gen::Polynomial p = gen::polynomial(rng, gen::integer(rng, 1, 8), 0.0, 10.0);
        // A vertical chord kept away from every root.
        double x = gen::uniform(rng, -1.5, 1.5);
        bool clear = true;
        for (const cplx z : p.roots)
            clear = clear && std::abs(z.real() - x) > 0.02 &&
                    std::abs(std::abs(z.real()) - 2.0) > 0.02 &&
                    std::abs(std::abs(z.imag()) - 2.0) > 0.02;
        if (!clear) continue;
        const int left = winding_polygon(p, Rect{r.re_min, x, r.im_min, r.im_max}.corners());
        const int right = winding_polygon(p, Rect{x, r.re_max, r.im_min, r.im_max}.corners());
        CHECK(left + right == winding_polygon(p, r.corners()));
        CHECK(left + right == static_cast<int>(p.roots.size()));
    }
}

TEST_CASE("locating roots of a polynomial") {
    gen::Rng rng(44);
    for (int i = 0; i < 10; ++i) {
        const gen::Polynomial p = gen::polynomial(rng, 4, 0.0, 10.0);
        LocateOptions o;
        o.grid = 4;
        o.certificate_radius = 1e-4;
        const LocateResult res = locate_zeros(p, Rect{-2.1, 2.1, -2.1, 2.1}, o);
        int total = 0;
        for (const ZeroCertificate& c : res.certificates) {
            total += c.winding;
            CHECK(c.radius <= 1e-4 * 1.0001);
            CHECK(p.roots_within(c.center, c.radius) == c.winding);
        }
        CHECK(total == 4);
        CHECK(res.region_winding == 4);
    }
}

TEST_CASE("topological orders") {
    CHECK(expected_topological_order(-1, 0) == 2);
    CHECK(expected_topological_order(-1, 1) == 3);
    CHECK(expected_topological_order(-1, 2) == 5);
    CHECK(expected_topological_order(-2, 1) == 6);
    CHECK(expected_topological_order(-3, 0) == 4);
}

TEST_CASE("dimension formulas") {
    const auto g2 = SurfaceTopology::compact(2);
    CHECK(dim_Hn(g2, 2) == 3);
    CHECK(dim_Hn(g2, 1) == 2);
    CHECK(dim_Hn(SurfaceTopology::convex_cocompact(-1), 1) == 2);
    CHECK(dim_Hn(SurfaceTopology::convex_cocompact(-1), 3) == 5);
    CHECK_THROWS_AS(dim_Hn(g2, 0), BadInput);
    CHECK_THROWS_AS(dim_Hn(SurfaceTopology::compact(1), 2), BadInput);
    CHECK_THROWS_AS(dim_Hn(SurfaceTopology::convex_cocompact(0), 2), BadInput);
}

TEST_CASE("property: dimension formulas in closed form") {
    // Compact: (2n-1)|χ|/2 for n > 1 and |χ|/2 + 1 for n = 1, with χ = 2 - 2g.
    // Convex co-compact: (2n-1)|χ| for n > 1 and |χ| + 1 for n = 1.
    for (int g = 2; g <= 5; ++g) {
        const int chi = 2 * g - 2;
        CHECK(dim_Hn(SurfaceTopology::compact(g), 1) == chi / 2 + 1);
        for (int n = 2; n <= 6; ++n)
            CHECK(2 * dim_Hn(SurfaceTopology::compact(g), n) == (2 * n - 1) * chi);
    }
    for (int chi = 1; chi <= 4; ++chi) {
        CHECK(dim_Hn(SurfaceTopology::convex_cocompact(-chi), 1) == chi + 1);
        for (int n = 2; n <= 6; ++n) {
            CHECK(dim_Hn(SurfaceTopology::convex_cocompact(-chi), n) == (2 * n - 1) * chi);
        }
    }
    const json report = dims_report();
    CHECK(report["pass"] == true);
}
