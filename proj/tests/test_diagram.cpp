#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistlink/builders.hpp"
#include "twistlink/diagram.hpp"

using namespace twistlink;

namespace {

std::multiset<int> face_degrees(const PlanarDiagram& d) {
    std::multiset<int> out;
    for (const auto& f : d.faces()) out.insert(f.degree);
    return out;
}

std::pair<int, int> color_split(const PlanarDiagram& d, const Coloring& col) {
    int blue = 0, red = 0;
    for (Color c : col.of_face) (c == Color::Blue ? blue : red)++;
    return {std::min(blue, red), std::max(blue, red)};
}

}  // namespace

TEST_CASE("trefoil PD: 3 crossings, faces 5, degrees {2,2,2,3,3}") {
    PlanarDiagram d = trefoil();
    CHECK(d.crossing_count() == 3);
    CHECK(d.edge_count() == 6);
    CHECK(d.faces().size() == 5);
    CHECK(face_degrees(d) == std::multiset<int>{2, 2, 2, 3, 3});
    CHECK(d.component_count() == 1);
    CHECK(d.genus() == 0);
    CHECK(d.is_alternating());
}

TEST_CASE("Hopf link PD: 2 components, four bigon faces") {
    PlanarDiagram d = hopf();
    CHECK(d.crossing_count() == 2);
    CHECK(d.component_count() == 2);
    CHECK(d.faces().size() == 4);
    CHECK(face_degrees(d) == std::multiset<int>{2, 2, 2, 2});
    CHECK(d.is_alternating());
}

TEST_CASE("figure-8 PD: 6 faces, degrees {2,2,3,3,3,3}") {
    PlanarDiagram d = figure8();
    CHECK(d.crossing_count() == 4);
    CHECK(d.faces().size() == 6);
    CHECK(face_degrees(d) == std::multiset<int>{2, 2, 3, 3, 3, 3});
    CHECK(d.component_count() == 1);
    CHECK(d.is_alternating());
}

TEST_CASE("1-crossing kink: 3 faces, two monogons and a bigon") {
    PlanarDiagram d = kink();
    CHECK(d.faces().size() == 3);
    CHECK(face_degrees(d) == std::multiset<int>{1, 1, 2});
    CHECK(d.is_alternating());
}

TEST_CASE("Euler and degree-sum identities hold on all reference diagrams") {
    for (const PlanarDiagram& d : {trefoil(), figure8(), hopf(), kink(), twist_column_link(5, 3)}) {
        int V = d.crossing_count(), E = d.edge_count(), F = static_cast<int>(d.faces().size());
        CHECK(V - E + F == 2);
        long long degsum = 0;
        for (const auto& f : d.faces()) degsum += f.degree;
        CHECK(degsum == 2LL * E);
        // every dart in exactly one face
        std::vector<int> seen(4 * V, 0);
        for (const auto& f : d.faces())
            for (int dd : f.darts) seen[dd]++;
        CHECK(std::count(seen.begin(), seen.end(), 1) == 4 * V);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_pd("X[1,1,1,2]"), ParseError);           // label three times
    CHECK_THROWS_AS(parse_pd("X[1,4,2,3]"), ParseError);           // labels missing their partner
    CHECK_THROWS_AS(parse_pd("X[1,2,3"), ParseError);              // malformed token
    CHECK_THROWS_AS(parse_pd("Y[1,2,2,1]"), ParseError);           // unknown token
    CHECK_THROWS_AS(parse_pd("X[1,2,1,2] X[3,4,3,4]"), ParseError);  // disconnected
    CHECK_NOTHROW(parse_pd(""));                                   // empty diagram parses
    CHECK_NOTHROW(parse_pd("PD[X[1,4,2,3], X[3,2,4,1]]"));         // wrapper accepted
}

TEST_CASE("serialize round-trips the canonical form") {
    for (const PlanarDiagram& d : {trefoil(), figure8(), hopf(), twist_column_link(4, 2)}) {
        PlanarDiagram d2 = parse_pd(serialize(d));
        CHECK(d2.slots() == d.slots());
        CHECK(serialize(d2) == serialize(d));
    }
}

TEST_CASE("checkerboard: proper coloring, deterministic, expected splits") {
    SUBCASE("trefoil splits 2/3") {
        PlanarDiagram d = trefoil();
        Coloring col = checkerboard(d);
        CHECK(color_split(d, col) == std::pair<int, int>{2, 3});
    }
    SUBCASE("figure-8 splits 3/3") {
        PlanarDiagram d = figure8();
        Coloring col = checkerboard(d);
        CHECK(color_split(d, col) == std::pair<int, int>{3, 3});
    }
    SUBCASE("Hopf splits 2/2") {
        PlanarDiagram d = hopf();
        Coloring col = checkerboard(d);
        CHECK(color_split(d, col) == std::pair<int, int>{2, 2});
    }
    SUBCASE("proper across every edge, recoloring is the identity") {
        for (const PlanarDiagram& d : {trefoil(), figure8(), hopf(), kink(), twist_column_link(3, 3)}) {
            Coloring col = checkerboard(d);
            for (const auto& [label, dd] : d.edges()) {
                (void)label;
                CHECK(col.of_face[d.face_of_dart(dd.first)] != col.of_face[d.face_of_dart(dd.second)]);
            }
            Coloring col2 = checkerboard(d);
            CHECK(col.of_face == col2.of_face);
        }
    }
}

TEST_CASE("is_alternating is invariant under cyclic relabeling of edge labels") {
    PlanarDiagram d = trefoil();
    int two_n = 2 * d.crossing_count();
    for (int shift : {1, 2, 5}) {
        std::vector<std::array<int, 4>> slots = d.slots();
        for (auto& s : slots)
            for (int& v : s) v = ((v - 1 + shift) % two_n) + 1;
        CHECK(PlanarDiagram(slots).is_alternating() == d.is_alternating());
    }
}

TEST_CASE("is_alternating: crossing swap breaks alternation") {
    // rotate one crossing's slots by one: exchanges under and over roles there
    std::vector<std::array<int, 4>> slots = trefoil().slots();
    std::array<int, 4> r = slots[0];
    slots[0] = {r[3], r[0], r[1], r[2]};
    PlanarDiagram d(slots);
    CHECK_FALSE(d.is_alternating());
}

TEST_CASE("validate: trefoil passes, genus-1 rotation system fails, empty reports") {
    ValidationReport ok = validate(trefoil());
    CHECK(ok.all_pass());

    PlanarDiagram torus_like = parse_pd("X[1,2,1,2]");  // one face, genus 1
    CHECK(torus_like.genus() == 1);
    ValidationReport bad = validate(torus_like);
    CHECK_FALSE(bad.all_pass());
    CHECK_FALSE(bad.find("genus_zero")->pass);

    ValidationReport empty = validate(parse_pd(""));
    CHECK_FALSE(empty.all_pass());
    CHECK(empty.find("nonempty")->detail == "no crossings");
}

TEST_CASE("twist_column_link matches reference censuses") {
    SUBCASE("J(1,2) is a trefoil diagram") {
        PlanarDiagram d = twist_column_link(1, 2);
        CHECK(d.crossing_count() == 3);
        CHECK(face_degrees(d) == face_degrees(trefoil()));
        CHECK(d.component_count() == 1);
        CHECK(d.is_alternating());
        CHECK(d.genus() == 0);
    }
    SUBCASE("J(2,2) matches the figure-8 census") {
        PlanarDiagram d = twist_column_link(2, 2);
        CHECK(face_degrees(d) == face_degrees(figure8()));
        CHECK(d.component_count() == 1);
        CHECK(d.is_alternating());
    }
    SUBCASE("J(3,2) is a 5-crossing knot, 7 faces") {
        PlanarDiagram d = twist_column_link(3, 2);
        CHECK(d.crossing_count() == 5);
        CHECK(d.faces().size() == 7);
        CHECK(face_degrees(d) == std::multiset<int>{2, 2, 2, 3, 3, 4, 4});
        CHECK(d.component_count() == 1);
        CHECK(d.is_alternating());
        CHECK(d.genus() == 0);
    }
    SUBCASE("large columns stay valid and alternating") {
        for (auto [a, b] : {std::pair{7, 4}, {10, 3}, {54, 2}}) {
            PlanarDiagram d = twist_column_link(a, b);
            CHECK(d.crossing_count() == a + b);
            CHECK(d.genus() == 0);
            CHECK(d.is_alternating());
            CHECK(validate(d).all_pass());
        }
    }
}

TEST_CASE("pretzel builder: P(1,1) is the Hopf census, P(1,1,1) the trefoil census") {
    PlanarDiagram p11 = pretzel({1, 1});
    CHECK(face_degrees(p11) == face_degrees(hopf()));
    PlanarDiagram p111 = pretzel({1, 1, 1});
    CHECK(face_degrees(p111) == face_degrees(trefoil()));
    PlanarDiagram p1212 = pretzel({1, 2, 1, 2});
    CHECK(p1212.crossing_count() == 6);
    CHECK(p1212.genus() == 0);
    CHECK(p1212.is_alternating());
    PlanarDiagram p122 = pretzel({1, 2, 2});
    CHECK(p122.genus() == 0);
    CHECK(p122.is_alternating());
}

TEST_CASE("splice_sum produces a connected 6-crossing planar diagram") {
    PlanarDiagram d = splice_sum(trefoil(), trefoil());
    CHECK(d.crossing_count() == 6);
    CHECK(d.edge_count() == 12);
    CHECK(d.genus() == 0);
    CHECK(d.is_alternating());
    CHECK(d.connected());
}
