#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/schottky.hpp"

using namespace zetalab;

namespace {

SchottkyGroup rank_three() {
    return symmetric_funnels(4, 3.0);
}

}  // namespace

TEST_CASE("words") {
    const Word w{{1, -2, 2}};
    CHECK_FALSE(w.is_reduced());
    const Word v{{1, 2, -1}};
    CHECK(v.is_reduced());
    CHECK_FALSE(v.is_cyclically_reduced());
    CHECK(v.inverse() == Word{{1, -2, -1}});
    CHECK(Word{{1, -2}}.to_string() == "aB");
    CHECK(is_primitive(Word{{1, 2}}));
    CHECK_FALSE(is_primitive(Word{{1, 2, 1, 2}}));
    CHECK(canonical_representative(Word{{2, 1}}, Convention::Oriented) == Word{{1, 2}});
    CHECK(canonical_representative(Word{{-2, -1}}, Convention::Unoriented) == Word{{1, 2}});
    CHECK(canonical_representative(Word{{-2, -1}}, Convention::Oriented) == Word{{-1, -2}});
    CHECK(convention_from_string("unoriented") == Convention::Unoriented);
    CHECK_THROWS_AS(convention_from_string("sideways"), BadInput);
}

TEST_CASE("validation") {
    const SchottkyGroup pants = pair_of_pants(5, 5, 5);
    CHECK(validate(pants).ok);
    CHECK(validate(funneled_torus(3, 4, 0.2)).ok);
    CHECK(validate(cylinder(2.0)).ok);

    const MoebiusMap g = MoebiusMap::from_entries(1.5, std::sqrt(1.25), std::sqrt(1.25), 1.5);
    const double c = 1.5 / std::sqrt(1.25), r = 1.0 / std::sqrt(1.25);
    CHECK(validate(SchottkyGroup({g}, {{{-c, r}, {c, r}}})).ok);

    const Diagnostics overlap = validate(SchottkyGroup({g}, {{{-c, r}, {-c + r, r}}}));
    CHECK(overlap.error_kind == "DiskOverlap");
    REQUIRE(overlap.pair);
    CHECK_THROWS_AS(require_valid(SchottkyGroup({g}, {{{-c, r}, {-c + r, r}}})), DiskOverlap);

    const SchottkyGroup rot({MoebiusMap::disk_rotation(0.4)}, {{{-3, 1}, {3, 1}}});
    CHECK(validate(rot).error_kind == "NonHyperbolicGenerator");
    CHECK_THROWS_AS(require_valid(rot), NonHyperbolicGenerator);

    const SchottkyGroup wrong({g}, {{{-c, r}, {c + 0.1, r}}});
    CHECK(validate(wrong).error_kind == "PairingMismatch");
    CHECK_THROWS_AS(require_valid(wrong), PairingMismatch);
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(pair_of_pants(5, 5, 5)) == -1);
    CHECK(euler_characteristic(rank_three()) == -2);
    CHECK(euler_characteristic(cylinder(1.0)) == 0);
}

TEST_CASE("preset traces") {
    const double l1 = 3.0, l2 = 4.0, l3 = 5.0;
    const SchottkyGroup p = pair_of_pants(l1, l2, l3);
    CHECK(std::abs(std::abs(p.element(1).trace()) - 2 * std::cosh(l1 / 2)) < 1e-10);
    CHECK(std::abs(std::abs(p.element(2).trace()) - 2 * std::cosh(l2 / 2)) < 1e-10);
    CHECK(std::abs(std::abs((p.element(1) * p.element(2)).trace()) - 2 * std::cosh(l3 / 2)) < 1e-9);
    CHECK(std::abs(translation_length(cylinder_from_trace(3.0).element(1)) - 1.9248473002384139) <
          1e-13);
}

TEST_CASE("small enumerations") {
    const SchottkyGroup p = pair_of_pants(5, 5, 5);
    CHECK(conjugacy_classes(p, 1, Convention::Unoriented).size() == 2);
    CHECK(conjugacy_classes(p, 2, Convention::Unoriented).size() == 4);
    CHECK(conjugacy_classes(p, 1, Convention::Oriented).size() == 4);
    const auto cyl_u = conjugacy_classes(cylinder(1.0), 6, Convention::Unoriented);
    const auto cyl_o = conjugacy_classes(cylinder(1.0), 6, Convention::Oriented);
    REQUIRE(cyl_u.size() == 1);
    CHECK(cyl_u[0].class_word.to_string() == "a");
    CHECK(cyl_o.size() == 2);
}

TEST_CASE("enumeration matches the brute-force oracle") {
    const std::vector<SchottkyGroup> groups{cylinder(1.0), pair_of_pants(5, 5, 5), rank_three()};
    for (const auto& g : groups) {
        for (Convention conv : {Convention::Oriented, Convention::Unoriented}) {
            const int max_len = 6;
            std::set<std::string> got;
            std::vector<std::string> listed;
            for (const auto& c : conjugacy_classes(g, max_len, conv)) {
                listed.push_back(c.class_word.to_string());
                got.insert(c.class_word.to_string());
            }
            CHECK(listed.size() == got.size());
            CHECK(got ==
                  oracle::conjugacy_classes(g.rank(), max_len, conv == Convention::Oriented));
        }
    }
}

TEST_CASE("class invariants") {
    for (const auto& c : conjugacy_classes(rank_three(), 5, Convention::Unoriented)) {
        CHECK(c.class_word.is_cyclically_reduced());
        CHECK(is_primitive(c.class_word));
        CHECK(canonical_representative(c.class_word, Convention::Unoriented) == c.class_word);
        CHECK(std::abs(c.length - 2 * std::acosh(std::abs(c.trace) / 2)) <
              1e-12 * std::max(1.0, c.length));
    }
}

TEST_CASE("property: trace is inversion symmetric") {
    gen::Rng rng(11);
    const SchottkyGroup g = rank_three();
    for (int i = 0; i < 200; ++i) {
        const Word w = gen::reduced_word(rng, 3, gen::integer(rng, 1, 9));
        const Mat2 m = g.word_matrix(w), mi = g.word_matrix(w.inverse());
        CHECK(std::abs((m.a + m.d) - (mi.a + mi.d)) <= 1e-12 * std::abs(m.a + m.d));
        CHECK(class_trace(g, w) == class_trace(g, w.inverse()));
    }
}

TEST_CASE("length spectrum") {
    const LengthSpectrum cyl = length_spectrum(cylinder_from_trace(3.0), 2.0,
                                               {Convention::Unoriented, kDefaultWordCap, 1.0});
    REQUIRE(cyl.geodesics.size() == 1);
    CHECK(std::abs(cyl.geodesics[0].length - 1.9248473002384139) < 1e-13);
    CHECK(length_spectrum(cylinder_from_trace(3.0), 30.0,
                          {Convention::Unoriented, kDefaultWordCap, 1.0})
              .geodesics.size() == 1);

    CHECK(length_spectrum(pair_of_pants(5, 5, 5), 4.0).geodesics.empty());

    const LengthSpectrum s = length_spectrum(pair_of_pants(5, 5, 5), 12.0);
    CHECK(!s.geodesics.empty());
    std::set<std::string> words;
    for (std::size_t i = 0; i < s.geodesics.size(); ++i) {
        if (i > 0) CHECK(s.geodesics[i - 1].length <= s.geodesics[i].length);
        CHECK(s.geodesics[i].length <= 12.0);
        words.insert(s.geodesics[i].class_word.to_string());
    }
    CHECK(words.size() == s.geodesics.size());
    // Every class of length ≤ cutoff at word length ≤ 8 is present.
    for (const auto& c : conjugacy_classes(pair_of_pants(5, 5, 5), 8, Convention::Oriented)) {
        if (c.length <= 12.0) CHECK(words.count(c.class_word.to_string()) == 1);
    }
}

TEST_CASE("word budget") {
    SpectrumOptions o;
    o.word_cap = 50;
    CHECK_THROWS_AS(length_spectrum(rank_three(), 30.0, o), BudgetExceeded);
    CHECK_THROWS_AS(conjugacy_classes(rank_three(), 8, Convention::Oriented, 100), BudgetExceeded);
}

TEST_CASE("property: counting function is monotone") {
    const SchottkyGroup g = funneled_torus(3, 3.5, 0.1);
    std::size_t prev = 0;
    for (double L : {4.0, 6.0, 8.0, 10.0, 11.0}) {
        const std::size_t n = length_spectrum(g, L).geodesics.size();
        CHECK(n >= prev);
        prev = n;
    }
    std::size_t prev_w = 0;
    for (int w = 1; w <= 6; ++w) {
        const std::size_t n = conjugacy_classes(g, w, Convention::Oriented).size();
        CHECK(n >= prev_w);
        prev_w = n;
    }
}

TEST_CASE("property: conjugation leaves the spectrum unchanged") {
    gen::Rng rng(12);
    const SchottkyGroup g = pair_of_pants(4, 5, 6);
    const LengthSpectrum base = length_spectrum(g, 11.0);
    for (int i = 0; i < 5; ++i) {
        // Small conjugators keep the pole away from the disks.
        const MoebiusMap h = MoebiusMap::from_entries(1.0, gen::uniform(rng, -0.3, 0.3), 0.0, 1.0) *
                             MoebiusMap::dilation(gen::uniform(rng, -0.5, 0.5));
        const SchottkyGroup gh = conjugate(g, h);
        CHECK(validate(gh).ok);
        const LengthSpectrum s = length_spectrum(gh, 11.0);
        REQUIRE(s.geodesics.size() == base.geodesics.size());
        std::vector<double> a, b;
        for (const auto& p : base.geodesics) a.push_back(p.length);
        for (const auto& p : s.geodesics) b.push_back(p.length);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) < 1e-10);
    }
}

TEST_CASE("limit set samples") {
    const SchottkyGroup g = pair_of_pants(5, 5, 5);
    const auto one = limit_set_sample(g, 1);
    CHECK(one.size() == 4);
    std::set<Letter> hit;
    for (const auto& p : one) {
        for (Letter a : g.letters()) {
            if (g.disk(a).contains(cplx(p.to_half_plane(), 0.0))) hit.insert(a);
        }
    }
    CHECK(hit.size() == 4);

    for (int depth = 2; depth <= 4; ++depth) {
        const auto pts = limit_set_sample(g, depth);
        const auto words = reduced_words(2, depth);
        REQUIRE(pts.size() == words.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (!words[i].is_cyclically_reduced()) continue;
            const double x = pts[i].to_half_plane();
            // The attracting point of w lies in the image of the disk of its
            // last letter under all but the last letter: nested refinement.
            Word prefix{{words[i].letters.begin(), words[i].letters.end() - 1}};
            const Disk inner = image_disk(g.word_element(prefix), g.disk(words[i].letters.back()));
            CHECK(inner.contains(cplx(x, 0.0), 1e-12));
            CHECK(g.disk(words[i].letters.front()).contains(cplx(x, 0.0), 1e-12));
        }
    }
}
