#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "twistlink/builders.hpp"
#include "twistlink/twist.hpp"

using namespace twistlink;

namespace {

std::multiset<int> region_sizes(const PlanarDiagram& d) {
    Coloring col = checkerboard(d);
    TwistRegions tr = twist_regions(d, col);
    std::multiset<int> out;
    for (const auto& r : tr.regions) out.insert(r.c);
    return out;
}

}  // namespace

TEST_CASE("twist_regions: reference censuses") {
    SUBCASE("figure-8: two open regions of two crossings, opposite bigon colors") {
        PlanarDiagram d = figure8();
        Coloring col = checkerboard(d);
        TwistRegions tr = twist_regions(d, col);
        REQUIRE(tr.regions.size() == 2);
        for (const auto& r : tr.regions) {
            CHECK(r.c == 2);
            CHECK_FALSE(r.closed);
            CHECK(r.bigons.size() == 1);
            CHECK_FALSE(r.mixed_colors);
        }
        CHECK(tr.regions[0].bigon_color != tr.regions[1].bigon_color);
    }
    SUBCASE("trefoil: one closed region of three crossings, three bigons") {
        PlanarDiagram d = trefoil();
        Coloring col = checkerboard(d);
        TwistRegions tr = twist_regions(d, col);
        REQUIRE(tr.regions.size() == 1);
        CHECK(tr.regions[0].c == 3);
        CHECK(tr.regions[0].closed);
        CHECK(tr.regions[0].bigons.size() == 3);
    }
    SUBCASE("5_2 shape J(3,2): regions {3,2}") { CHECK(region_sizes(twist_column_link(3, 2)) == std::multiset<int>{2, 3}); }
    SUBCASE("Hopf: one closed region of two crossings") {
        PlanarDiagram d = hopf();
        TwistRegions tr = twist_regions(d, checkerboard(d));
        REQUIRE(tr.regions.size() == 1);
        CHECK(tr.regions[0].c == 2);
        CHECK(tr.regions[0].closed);
        CHECK(tr.regions[0].bigons.size() == 4);
    }
    SUBCASE("kink: lone crossing region, curl bigon excluded from chains") {
        PlanarDiagram d = kink();
        TwistRegions tr = twist_regions(d, checkerboard(d));
        REQUIRE(tr.regions.size() == 1);
        CHECK(tr.regions[0].c == 1);
        CHECK(tr.regions[0].bigon_color == Color::Unset);
        CHECK(tr.curl_bigons.size() == 1);
    }
    SUBCASE("pretzel P(1,2,1,2): regions {1,1,2,2}") {
        CHECK(region_sizes(pretzel({1, 2, 1, 2})) == std::multiset<int>{1, 1, 2, 2});
    }
    SUBCASE("pretzel P(1,2,2): isolated single-crossing region") {
        CHECK(region_sizes(pretzel({1, 2, 2})) == std::multiset<int>{1, 2, 2});
    }
}

TEST_CASE("twist_regions: partition and bigon-count invariants over a family") {
    std::vector<PlanarDiagram> corpus;
    for (int a = 1; a <= 5; ++a)
        for (int b = 2; b <= 4; ++b) corpus.push_back(twist_column_link(a, b));
    corpus.push_back(pretzel({2, 2, 2}));
    corpus.push_back(pretzel({1, 2, 1, 2}));
    for (const auto& d : corpus) {
        Coloring col = checkerboard(d);
        TwistRegions tr = twist_regions(d, col);
        CHECK(tr.total_crossings() == d.crossing_count());
        std::vector<int> count(d.crossing_count(), 0);
        for (const auto& r : tr.regions)
            for (int x : r.crossings) count[x]++;
        CHECK(std::count(count.begin(), count.end(), 1) == d.crossing_count());
        for (const auto& r : tr.regions) {
            if (r.c >= 2 && !r.closed) CHECK(static_cast<int>(r.bigons.size()) == r.c - 1);
            if (r.closed) CHECK(static_cast<int>(r.bigons.size()) >= r.c);
            if (r.c >= 2) {
                CHECK(r.bigon_color != Color::Unset);
                CHECK_FALSE(r.mixed_colors);
                CHECK(r.sign != 0);  // a twist region's crossings share a sign
            }
        }
    }
}

TEST_CASE("is_prime") {
    CHECK(is_prime(trefoil()));
    CHECK(is_prime(figure8()));
    CHECK(is_prime(hopf()));
    CHECK(is_prime(kink()));  // monogon side has no crossings
    CHECK(is_prime(twist_column_link(5, 4)));
    CHECK(is_prime(pretzel({1, 2, 1, 2})));

    SUBCASE("connected sum of two trefoils fails with the splice edges as witness") {
        PlanarDiagram d = splice_sum(trefoil(), trefoil());
        auto w = is_prime_witness(d);
        REQUIRE(w.has_value());
        CHECK(w->kind == CurveWitness::Kind::PrimeViolation);
        CHECK(w->through[0] != w->through[1]);
        CHECK(w->sides[0].size() == 3);
        CHECK(w->sides[1].size() == 3);
        CHECK(w->faces[0] != w->faces[1]);
    }
}

TEST_CASE("is_twist_reduced") {
    auto reduced = [](const PlanarDiagram& d) { return is_twist_reduced(d, checkerboard(d)); };
    CHECK(reduced(figure8()));
    CHECK(reduced(trefoil()));
    CHECK(reduced(hopf()));
    CHECK(reduced(twist_column_link(3, 2)));
    CHECK(reduced(twist_column_link(4, 3)));
    CHECK(reduced(pretzel({2, 2, 2})));
    CHECK(reduced(pretzel({1, 2, 2})));

    SUBCASE("two clasps stacked through the same two faces are not twist reduced") {
        PlanarDiagram d = pretzel({1, 2, 1, 2});
        Coloring col = checkerboard(d);
        auto w = twist_reduced_witness(d, col);
        REQUIRE(w.has_value());
        CHECK(w->kind == CurveWitness::Kind::TwistReducedViolation);
        // the violating curve passes through the two singleton-region crossings
        std::set<int> through(w->through.begin(), w->through.end());
        CHECK(through == std::set<int>{0, 3});
        std::multiset<std::size_t> side_sizes{w->sides[0].size(), w->sides[1].size()};
        CHECK(side_sizes == std::multiset<std::size_t>{2, 2});
    }
}

TEST_CASE("is_color_twist_reduced: restriction of the unrestricted check") {
    std::vector<PlanarDiagram> corpus{figure8(), trefoil(), hopf(), twist_column_link(3, 2),
                                      twist_column_link(4, 3), pretzel({2, 2, 2}), pretzel({1, 2, 2})};
    for (const auto& d : corpus) {
        Coloring col = checkerboard(d);
        if (is_twist_reduced(d, col)) {
            CHECK(is_color_twist_reduced(d, col, Color::Blue));
            CHECK(is_color_twist_reduced(d, col, Color::Red));
        }
    }
    SUBCASE("the stacked-clasp violation is caught on its colour") {
        PlanarDiagram d = pretzel({1, 2, 1, 2});
        Coloring col = checkerboard(d);
        auto w = twist_reduced_witness(d, col);
        REQUIRE(w.has_value());
        Color curve_color = col.of_face[w->faces[0]];
        CHECK(col.of_face[w->faces[1]] == curve_color);
        CHECK_FALSE(is_color_twist_reduced(d, col, curve_color));
    }
}

TEST_CASE("twist_number") {
    CHECK(twist_number(figure8(), checkerboard(figure8())) == 2);
    {
        PlanarDiagram d = twist_column_link(3, 2);
        CHECK(twist_number(d, checkerboard(d)) == 2);
    }
    CHECK(twist_number(trefoil(), checkerboard(trefoil())) == 1);
    SUBCASE("refuses non-twist-reduced input, carrying the witness") {
        PlanarDiagram d = pretzel({1, 2, 1, 2});
        Coloring col = checkerboard(d);
        CHECK_THROWS_AS(twist_number(d, col), NotTwistReduced);
        try {
            twist_number(d, col);
        } catch (const NotTwistReduced& e) {
            CHECK(e.witness.kind == CurveWitness::Kind::TwistReducedViolation);
        }
    }
    SUBCASE("refuses non-prime input") {
        PlanarDiagram d = splice_sum(trefoil(), trefoil());
        CHECK_THROWS_AS(twist_number(d, checkerboard(d)), NotTwistReduced);
    }
}

TEST_CASE("oracle agreement on all small diagrams") {
    std::vector<PlanarDiagram> corpus{trefoil(),
                                      figure8(),
                                      hopf(),
                                      kink(),
                                      twist_column_link(2, 2),
                                      twist_column_link(3, 2),
                                      twist_column_link(4, 2),
                                      twist_column_link(3, 3),
                                      twist_column_link(2, 4),
                                      twist_column_link(1, 2),
                                      pretzel({2, 2, 2}),
                                      pretzel({1, 2, 2}),
                                      pretzel({1, 2, 1, 2}),
                                      pretzel({2, 3, 2}),
                                      pretzel({1, 3, 1, 3}),
                                      splice_sum(trefoil(), trefoil())};
    for (const auto& d : corpus) {
        CAPTURE(serialize(d));
        CHECK(is_prime(d) == oracle::oracle_is_prime(d));
        Coloring col = checkerboard(d);
        CHECK(is_twist_reduced(d, col) == oracle::oracle_is_twist_reduced(d, col));
        CHECK(is_color_twist_reduced(d, col, Color::Blue) ==
              oracle::oracle_is_twist_reduced(d, col, Color::Blue));
        CHECK(is_color_twist_reduced(d, col, Color::Red) ==
              oracle::oracle_is_twist_reduced(d, col, Color::Red));
    }
}

TEST_CASE("curve witness sides partition the off-curve crossings") {
    PlanarDiagram d = pretzel({1, 2, 1, 2});
    Coloring col = checkerboard(d);
    auto w = twist_reduced_witness(d, col);
    REQUIRE(w.has_value());
    std::set<int> all;
    for (int s = 0; s < 2; ++s)
        for (int c : w->sides[s]) CHECK(all.insert(c).second);
    all.insert(w->through[0]);
    all.insert(w->through[1]);
    CHECK(static_cast<int>(all.size()) == d.crossing_count());
}
