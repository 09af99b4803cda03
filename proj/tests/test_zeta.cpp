#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;

namespace {

LengthSpectrum unit_cylinder(Convention c) {
    SpectrumOptions o;
    o.convention = c;
    return length_spectrum(cylinder(1.0), 2.0, o);
}

// Partial products written out directly, independent of the engine.
cplx selberg_product(cplx s, double l, int k_max) {
    cplx v = 1.0;
    for (int k = 0; k <= k_max; ++k) v *= 1.0 - std::exp(-(s + static_cast<double>(k)) * l);
    return v;
}

cplx ruelle_product(cplx lambda, double l, int m_max) {
    cplx v = 1.0;
    for (int m = 1; m <= m_max; ++m)
        v *= std::pow(1.0 - std::exp(-(lambda + static_cast<double>(m)) * l), m);
    return v;
}

}  // namespace

TEST_CASE("cylinder values against partial products") {
    const LengthSpectrum u = unit_cylinder(Convention::Unoriented);
    REQUIRE(u.geodesics.size() == 1);
    const ZetaEvaluation z = selberg_zeta(1.0, u, 50);
    CHECK(std::abs(z.value - selberg_product(1.0, 1.0, 50)) < 1e-14);
    CHECK(std::abs(z.value.real() - 0.5045) < 1e-4);
    CHECK(z.method == ZetaMethod::EulerProduct);

    const ZetaEvaluation r = ruelle_zeta(1.0, u, 50);
    CHECK(std::abs(r.value - ruelle_product(1.0, 1.0, 50)) < 1e-14);

    for (cplx s : {cplx(0.7, 3.0), cplx(2.0, -1.0)}) {
        CHECK(std::abs(selberg_zeta(s, u, 40).value - selberg_product(s, 1.0, 40)) < 1e-13);
        CHECK(std::abs(ruelle_zeta(s, u, 40).value - ruelle_product(s, 1.0, 40)) < 1e-13);
    }
}

TEST_CASE("orientation doubles every class") {
    const LengthSpectrum u = unit_cylinder(Convention::Unoriented);
    const LengthSpectrum o = unit_cylinder(Convention::Oriented);
    CHECK(o.geodesics.size() == 2 * u.geodesics.size());
    for (cplx s : {cplx(1.0), cplx(0.5, 2.0)}) {
        const cplx zu = selberg_zeta(s, u).value, zo = selberg_zeta(s, o).value;
        CHECK(std::abs(zo - zu * zu) < 1e-13);
    }
}

TEST_CASE("far right the products tend to one") {
    const LengthSpectrum s = length_spectrum(pair_of_pants(5, 5, 5), 12.0);
    CHECK(std::abs(selberg_zeta(40.0, s).value - 1.0) < 1e-15);
    CHECK(std::abs(ruelle_zeta(cplx(40.0, 7.0), s).value - 1.0) < 1e-15);
}

TEST_CASE("empty spectrum") {
    const LengthSpectrum s = length_spectrum(pair_of_pants(5, 5, 5), 3.0);
    CHECK_THROWS_AS(selberg_zeta(1.0, s), SpectrumEmpty);
    CHECK_THROWS_AS(ruelle_zeta(1.0, s), SpectrumEmpty);
}

TEST_CASE("poincare identity") {
    // The residual is the geometric tail itself, so "below the bound" holds
    // with equality up to the last bits of the bound.
    auto below = [](double l, int k, int p) {
        return poincare_identity_check(l, k, p) <= poincare_identity_bound(l, k, p) * (1 + 1e-12);
    };
    CHECK(poincare_identity_check(1.0, 1, 40) < 1e-17);
    CHECK(below(0.1, 1, 400));
    CHECK(below(2.0, 3, 10));
    gen::Rng rng(21);
    for (int i = 0; i < 50; ++i) {
        // Bounds stay above 1e-50, well inside the working precision.
        const double l = gen::uniform(rng, 0.2, 3.0);
        const int k = gen::integer(rng, 1, 3), p = gen::integer(rng, 0, 10);
        CHECK(below(l, k, p));
        CHECK(poincare_identity_check(l, k, p) > 0.9 * poincare_identity_bound(l, k, p));
    }
    CHECK_THROWS_AS(poincare_identity_check(0.0, 1, 3), BadInput);
}

TEST_CASE("factorization") {
    const LengthSpectrum u = unit_cylinder(Convention::Unoriented);
    CHECK(factorization_check(2.0, u, 40).residual < 1e-10);
    const LengthSpectrum p = length_spectrum(pair_of_pants(5, 5, 5), 12.0);
    const FactorizationResult r = factorization_check(3.0, p);
    CHECK(r.residual < 1e-8);
    CHECK(r.quotient_residual < 1e-8);
    CHECK(factorization_check(cplx(30.0, 2.0), p).residual < 1e-15);
}

TEST_CASE("property: value is the exponential of the logarithm") {
    gen::Rng rng(22);
    const LengthSpectrum s = length_spectrum(pair_of_pants(4, 5, 6), 12.0);
    for (int i = 0; i < 50; ++i) {
        const cplx z = gen::in_box(rng, 0.8, 3.0, -20, 20);
        for (const ZetaEvaluation& e : {selberg_zeta(z, s), ruelle_zeta(z, s)}) {
            CHECK(std::abs(e.value - std::exp(e.log_value)) <= 1e-13 * std::abs(e.value));
            CHECK(e.tail_bound >= 0.0);
        }
    }
}

TEST_CASE("property: real on the real axis") {
    const LengthSpectrum s = length_spectrum(pair_of_pants(5, 5, 5), 12.0);
    for (double x : {0.8, 1.0, 1.7, 3.0}) {
        CHECK(std::abs(selberg_zeta(x, s).value.imag()) < 1e-13);
        CHECK(std::abs(ruelle_zeta(x, s).value.imag()) < 1e-13);
    }
}

TEST_CASE("property: tail bounds are honest") {
    // Extending the spectrum or the k-range moves log Z by less than the
    // bound reported for the shorter computation.
    gen::Rng rng(23);
    for (const SchottkyGroup& g : {pair_of_pants(5, 5, 5), symmetric_funnels(4, 5.0)}) {
        const LengthSpectrum s12 = length_spectrum(g, 12.0), s18 = length_spectrum(g, 18.0);
        for (int i = 0; i < 20; ++i) {
            const cplx z = gen::in_box(rng, 0.65, 3.0, -15, 15);
            const ZetaEvaluation a = selberg_zeta(z, s12), b = selberg_zeta(z, s18);
            CHECK(std::abs(a.log_value - b.log_value) < a.tail_bound);
            const ZetaEvaluation a32 = selberg_zeta(z, s12, 32);
            CHECK(std::abs(a32.log_value - a.log_value) < a32.tail_bound);
            const ZetaEvaluation ra = ruelle_zeta(z, s12), rb = ruelle_zeta(z, s18);
            CHECK(std::abs(ra.log_value - rb.log_value) < ra.tail_bound);
        }
    }
}

TEST_CASE("property: factorization within tolerance right of delta") {
    gen::Rng rng(24);
    const LengthSpectrum s = length_spectrum(pair_of_pants(5, 5, 5), 12.0);
    const double delta = 0.2726;
    for (int i = 0; i < 10; ++i) {
        const cplx l = gen::in_box(rng, delta + 0.5, 3.0, -8, 8);
        const FactorizationResult r = factorization_check(l, s);
        CHECK(r.residual < std::max(1e-8, r.tail_bound));
    }
}

TEST_CASE("property: conjugation leaves zeta values unchanged") {
    const SchottkyGroup g = pair_of_pants(5, 5, 5);
    const SchottkyGroup gh =
        conjugate(g, MoebiusMap::from_entries(1.0, 0.2, 0.0, 1.0) * MoebiusMap::dilation(0.3));
    const LengthSpectrum a = length_spectrum(g, 12.0), b = length_spectrum(gh, 12.0);
    gen::Rng rng(25);
    for (int i = 0; i < 10; ++i) {
        const cplx z = gen::in_box(rng, 0.8, 2.5, -10, 10);
        CHECK(std::abs(selberg_zeta(z, a).log_value - selberg_zeta(z, b).log_value) < 1e-10);
    }
}
