#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistlink/augment.hpp"
#include "twistlink/builders.hpp"

using namespace twistlink;

namespace {

AugmentedDiagram make_reduced(const PlanarDiagram& d, int n_tw, int i,
                              AugmentFilter f = AugmentFilter::All) {
    Coloring col = checkerboard(d);
    return reduce_twists(augment(d, col, n_tw, f), i);
}

}  // namespace

TEST_CASE("augment: circle placement by threshold") {
    PlanarDiagram f8 = figure8();
    Coloring col = checkerboard(f8);
    CHECK(augment(f8, col, 2).circles.size() == 2);
    CHECK(augment(f8, col, 3).circles.size() == 0);

    PlanarDiagram k52 = twist_column_link(3, 2);
    Coloring col52 = checkerboard(k52);
    AugmentedDiagram L = augment(k52, col52, 3);
    REQUIRE(L.circles.size() == 1);
    CHECK(L.circles[0].original_c == 3);
    CHECK(L.stage == Stage::L);

    SUBCASE("blue filter keeps only blue-puncturing circles") {
        AugmentedDiagram LB = augment(f8, col, 2, AugmentFilter::Blue);
        CHECK(LB.stage == Stage::L_B);
        CHECK(LB.circles.size() == 1);  // figure-8's two regions have opposite bigon colors
        CHECK(LB.circles[0].punctured == Color::Blue);
    }
    SUBCASE("punctured color is opposite the region's bigon color") {
        AugmentedDiagram La = augment(f8, col, 2);
        TwistRegions tr = twist_regions(f8, col);
        for (const auto& cc : La.circles)
            CHECK(cc.punctured == opposite(tr.regions[cc.region].bigon_color));
    }
    SUBCASE("preconditions") {
        PlanarDiagram bad = pretzel({1, 2, 1, 2});
        CHECK_THROWS_AS(augment(bad, checkerboard(bad), 2), NotTwistReduced);
        std::vector<std::array<int, 4>> slots = trefoil().slots();
        std::array<int, 4> r = slots[0];
        slots[0] = {r[3], r[0], r[1], r[2]};
        PlanarDiagram nonalt(slots);
        CHECK_THROWS_AS(augment(nonalt, checkerboard(nonalt), 2), NotAlternating);
    }
}

TEST_CASE("reduce_twists: removal arithmetic") {
    SUBCASE("5_2, one circle on c=3, i=0: r=1, n_j=1, one associated crossing") {
        AugmentedDiagram L0 = make_reduced(twist_column_link(3, 2), 3, 0);
        REQUIRE(L0.circles.size() == 1);
        const CrossingCircle& cc = L0.circles[0];
        CHECK(cc.r == 1);
        CHECK(cc.n_j == 1);
        CHECK(cc.associated.size() == 1);
        CHECK(cc.triangle_flag);
        CHECK_FALSE(cc.bigon_thread_flag);
        CHECK(L0.stage == Stage::L0);
        CHECK(L0.base.crossing_count() == 3);  // 1 left in the c=3 region + the untouched clasp
    }
    SUBCASE("region c=8: i=2 gives r=2, n_j=3; i=0 gives r=0, n_j=4") {
        PlanarDiagram d = twist_column_link(8, 2);
        AugmentedDiagram L2 = make_reduced(d, 5, 2);
        REQUIRE(L2.circles.size() == 1);
        CHECK(L2.circles[0].r == 2);
        CHECK(L2.circles[0].n_j == 3);
        CHECK(L2.circles[0].associated.size() == 2);
        CHECK(L2.circles[0].bigon_thread_flag);

        AugmentedDiagram L0 = make_reduced(d, 5, 0);
        CHECK(L0.circles[0].r == 0);
        CHECK(L0.circles[0].n_j == 4);
        CHECK(L0.circles[0].associated.empty());
        CHECK(L0.circles[0].site_edges.size() == 2);
        CHECK(L0.base.crossing_count() == 2);
    }
    SUBCASE("c = r + 2 n_j for every circle; base stays valid and alternating") {
        for (auto [a, b] : {std::pair{4, 2}, {5, 3}, {6, 5}, {7, 2}}) {
            for (int i : {0, 2}) {
                AugmentedDiagram Li = make_reduced(twist_column_link(a, b), 3, i);
                for (const auto& cc : Li.circles) CHECK(cc.original_c == cc.r + 2 * cc.n_j);
                CHECK(Li.base.is_alternating());
                CHECK(Li.base.genus() == 0);
                CHECK(Li.base.connected());
                // inherited coloring is still proper
                for (const auto& [label, dd] : Li.base.edges()) {
                    (void)label;
                    CHECK(Li.base_coloring.of_face[Li.base.face_of_dart(dd.first)] !=
                          Li.base_coloring.of_face[Li.base.face_of_dart(dd.second)]);
                }
            }
        }
    }
    SUBCASE("re-reduction is the identity") {
        AugmentedDiagram L2 = make_reduced(twist_column_link(6, 3), 2, 2);
        AugmentedDiagram L2b = reduce_twists(L2, 2);
        CHECK(serialize(L2b.base) == serialize(L2.base));
        CHECK(L2b.circles.size() == L2.circles.size());
        CHECK_THROWS_AS(reduce_twists(L2, 0), PreconditionError);
    }
}

TEST_CASE("strip_circles") {
    SUBCASE("K_2 is prime on a family of seeds") {
        for (auto [a, b] : {std::pair{4, 2}, {5, 2}, {5, 3}, {6, 2}, {7, 3}}) {
            AugmentedDiagram L2 = make_reduced(twist_column_link(a, b), 2, 2, AugmentFilter::Blue);
            PlanarDiagram K2 = strip_circles(L2);
            CHECK(is_prime(K2));
            CHECK(K2.is_alternating());
        }
    }
    SUBCASE("K_0 from 5_2's L_0 keeps three crossings") {
        AugmentedDiagram L0 = make_reduced(twist_column_link(3, 2), 3, 0);
        CHECK(strip_circles(L0).crossing_count() == 3);
    }
    SUBCASE("zero circles: base is the input diagram") {
        PlanarDiagram f8 = figure8();
        Coloring col = checkerboard(f8);
        AugmentedDiagram L = reduce_twists(augment(f8, col, 91), 2);
        CHECK(serialize(strip_circles(L)) == serialize(f8));
        CHECK_THROWS_AS(r_tw(L), NoCircles);
    }
}

TEST_CASE("r_tw reproduces the threshold table") {
    struct Row {
        int n_tw, i, expect;
    };
    for (Row row : {Row{54, 0, 54}, Row{91, 2, 90}, Row{72, 0, 72}, Row{121, 2, 120}}) {
        PlanarDiagram d = twist_column_link(row.n_tw, 2);  // worst case: region c = N_tw
        AugmentedDiagram Li = make_reduced(d, row.n_tw, row.i);
        REQUIRE(Li.circles.size() == 1);
        CHECK(r_tw(Li) == row.expect);
        int bound = (row.i == 0) ? 2 * (row.n_tw / 2) : 2 * ((row.n_tw + 1) / 2) - 2;
        CHECK(r_tw(Li) >= bound);
    }
}

TEST_CASE("validate_augmented") {
    SUBCASE("figure-8 seed, N_tw=2, i=0, blue filter: all items pass") {
        AugmentedDiagram LB0 = make_reduced(figure8(), 2, 0, AugmentFilter::Blue);
        StructureReport rep = validate_augmented(LB0);
        CHECK(rep.all_pass());
    }
    SUBCASE("family of seeds, both i: all items pass") {
        for (auto [a, b] : {std::pair{3, 2}, {4, 3}, {5, 2}, {6, 5}}) {
            for (int i : {0, 2}) {
                AugmentedDiagram LBi = make_reduced(twist_column_link(a, b), 2, i, AugmentFilter::Blue);
                StructureReport rep = validate_augmented(LBi);
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(i);
                CHECK(rep.all_pass());
            }
        }
    }
    SUBCASE("hand-built violation: both punctures in one blue face fails item 3") {
        PlanarDiagram k = kink();
        Coloring col = checkerboard(k);
        // color the curl bigon blue so the circle's two blue faces coincide
        int bigon_face = -1;
        for (const auto& f : k.faces())
            if (f.is_bigon()) bigon_face = f.id;
        if (col.of_face[bigon_face] != Color::Blue)
            for (auto& c : col.of_face) c = opposite(c);
        AugmentedDiagram bad;
        bad.base = k;
        bad.base_coloring = col;
        bad.stage = Stage::LB0;
        bad.i = 0;
        bad.n_tw = 1;
        CrossingCircle cc;
        cc.id = 0;
        cc.region = 0;
        cc.original_c = 3;
        cc.r = 1;
        cc.n_j = 1;
        cc.associated = {0};
        cc.punctured = Color::Blue;
        cc.triangle_flag = true;
        bad.circles.push_back(cc);
        bad.provenance = {0};
        StructureReport rep = validate_augmented(bad);
        CHECK_FALSE(rep.find("circle_meets_two_blue_regions")->pass);
    }
    SUBCASE("Hopf base with a circle encircling both crossings fails the torus exclusion") {
        PlanarDiagram h = hopf();
        AugmentedDiagram bad;
        bad.base = h;
        bad.base_coloring = checkerboard(h);
        bad.stage = Stage::LB2;
        bad.i = 2;
        bad.n_tw = 2;
        CrossingCircle cc;
        cc.id = 0;
        cc.region = 0;
        cc.original_c = 4;
        cc.r = 2;
        cc.n_j = 1;
        cc.associated = {0, 1};
        cc.punctured = Color::Blue;
        cc.bigon_thread_flag = true;
        bad.circles.push_back(cc);
        bad.provenance = {0, 1};
        StructureReport rep = validate_augmented(bad);
        CHECK_FALSE(rep.find("torus22_exclusion")->pass);
        CHECK(rep.find("association_caps")->pass);  // two associated is legal for i=2
    }
    SUBCASE("association caps hold on constructions") {
        for (auto [a, b] : {std::pair{4, 2}, {5, 3}, {8, 2}}) {
            for (int i : {0, 2}) {
                AugmentedDiagram Li = make_reduced(twist_column_link(a, b), 3, i);
                for (const auto& cc : Li.circles) {
                    if (i == 0) CHECK(cc.associated.size() <= 1);
                    if (i == 2) {
                        CHECK(cc.associated.size() >= 1);
                        CHECK(cc.associated.size() <= 2);
                    }
                }
            }
        }
    }
    SUBCASE("K_{B,i} is blue twist reduced on a family of seeds") {
        for (auto [a, b] : {std::pair{3, 2}, {4, 2}, {5, 3}, {6, 4}}) {
            for (int i : {0, 2}) {
                AugmentedDiagram LBi = make_reduced(twist_column_link(a, b), 2, i, AugmentFilter::Blue);
                PlanarDiagram KBi = strip_circles(LBi);
                CHECK(is_color_twist_reduced(KBi, LBi.base_coloring, Color::Blue));
            }
        }
    }
}

TEST_CASE("provenance tracks seed crossings through reduction") {
    PlanarDiagram seed = twist_column_link(5, 3);
    AugmentedDiagram Li = make_reduced(seed, 2, 0);
    for (std::size_t c = 0; c < Li.provenance.size(); ++c) {
        int old = Li.provenance[c];
        CHECK(old >= 0);
        CHECK(old < seed.crossing_count());
    }
}
