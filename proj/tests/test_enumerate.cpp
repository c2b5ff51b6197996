#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistlink/enumerate.hpp"

using namespace twistlink;

namespace {

// Brute-force generator: every pairing and every rotation permutation on 2E
// darts, filtered to connected genus-0 maps, grouped by canonical form.
// Independent of the growth-based engine.
long long naive_sphere_count(int max_edges) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> classes;
    classes.insert(enum_detail::canonical_hash([] {
        EmbeddedGraph g;
        g.n_vertices = 1;
        return g;
    }()));  // the lone vertex
    for (int E = 1; E <= max_edges; ++E) {
        const int n = 2 * E;
        // alpha is fixed by the packed convention; enumerate sigma as any
        // permutation of darts, then read vertices off its cycles
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::vector<int> sigma(n);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == n) {
                EmbeddedGraph g;
                g.sigma = sigma;
                g.vertex_of.assign(n, -1);
                int nv = 0;
                for (int d = 0; d < n; ++d) {
                    if (g.vertex_of[d] != -1) continue;
                    int cur = d;
                    while (g.vertex_of[cur] == -1) {
                        g.vertex_of[cur] = nv;
                        cur = sigma[cur];
                    }
                    if (cur != d) return;  // sigma cycle not closed cleanly
                    ++nv;
                }
                g.n_vertices = nv;
                CombMap m = g.as_comb_map();
                if (!map_connected(m)) return;
                FaceSet fs = face_walk(m);
                if (map_genus(m, fs) != 0) return;
                classes.insert(enum_detail::canonical_hash(g));
                return;
            }
            for (int v = 0; v < n; ++v) {
                bool used = false;
                for (int i = 0; i < pos; ++i)
                    if (sigma[i] == v) used = true;
                if (!used) {
                    sigma[pos] = v;
                    rec(pos + 1);
                }
            }
        };
        rec(0);
    }
    return static_cast<long long>(classes.size());
}

}  // namespace

TEST_CASE("enumeration count matches the brute-force generator at <= 3 edges") {
    long long naive = naive_sphere_count(3);
    long long engine = 0;
    Enumerator en(Context::Sphere, 3, Constraints{});
    en.run([&](const EmbeddedGraph&) { ++engine; });
    CHECK(engine == naive);
    CHECK(engine > 0);
}

TEST_CASE("sphere enumeration with lemma constraints includes the triangle and K4") {
    Constraints c;
    c.no_monogons = c.no_bigons = true;
    c.min_vertices = 3;
    std::set<std::pair<std::uint64_t, std::uint64_t>> found;
    Enumerator en(Context::Sphere, 6, c);
    en.run([&](const EmbeddedGraph& g) { found.insert(enum_detail::canonical_hash(g)); });

    EmbeddedGraph triangle = from_rotations(3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 2}, {1, 0}, {2, 1}});
    CHECK(found.count(enum_detail::canonical_hash(triangle)) == 1);

    // K4 embedded in the sphere
    EmbeddedGraph k4 = from_rotations(
        4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}},
        {{0, 1, 2}, {0, 5, 3}, {1, 3, 4}, {2, 4, 5}});
    CHECK(faces_and_genus(k4).genus == 0);
    CHECK(found.count(enum_detail::canonical_hash(k4)) == 1);

    EmbeddedGraph theta = from_rotations(2, {{0, 1}, {0, 1}, {0, 1}}, {{0, 1, 2}, {2, 1, 0}});
    CHECK(found.count(enum_detail::canonical_hash(theta)) == 0);
}

TEST_CASE("disk enumeration: boundary-only graphs up to 5 edges are the cycles without monogons") {
    Constraints c;
    c.no_monogons = true;
    c.boundary_only = true;
    std::vector<int> boundary_lengths;
    Enumerator en(Context::Disk, 5, c);
    en.run([&](const EmbeddedGraph& g) { boundary_lengths.push_back(g.edge_count()); });
    std::sort(boundary_lengths.begin(), boundary_lengths.end());
    CHECK(boundary_lengths == std::vector<int>{2, 3, 4, 5});  // the loop boundary leaves a monogon
}

TEST_CASE("torus enumeration at 2 edges finds exactly the two-loop vertex map") {
    long long count = 0;
    EmbeddedGraph found;
    Enumerator en(Context::Torus, 2, Constraints{});
    en.run([&](const EmbeddedGraph& g) {
        ++count;
        found = g;
    });
    CHECK(count == 1);
    CHECK(found.n_vertices == 1);
    CHECK(found.edge_count() == 2);
    CHECK(faces_and_genus(found).genus == 1);
}

TEST_CASE("enumeration is deterministic") {
    Constraints c;
    c.no_monogons = c.no_bigons = true;
    auto run_once = [&] {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> keys;
        Enumerator en(Context::Sphere, 6, c);
        en.run([&](const EmbeddedGraph& g) { keys.push_back(enum_detail::canonical_hash(g)); });
        return keys;
    };
    CHECK(run_once() == run_once());
}

TEST_CASE("cap enforcement") {
    CHECK_THROWS_AS(Enumerator(Context::Sphere, 99, Constraints{}), CapExceeded);
}

TEST_CASE("lemma campaigns at unit-test caps: zero counterexamples") {
    SUBCASE("sphere <= 8") {
        CampaignReport rep = search_counterexamples(LemmaName::Sphere, 8);
        CHECK(rep.counterexamples == 0);
        CHECK(rep.instances_checked > 0);
        CHECK(rep.holds > 0);
    }
    SUBCASE("disk <= 7") {
        CampaignReport rep = search_counterexamples(LemmaName::Disk, 7);
        CHECK(rep.counterexamples == 0);
        CHECK(rep.holds > 0);
    }
    SUBCASE("torus <= 6") {
        CampaignReport rep = search_counterexamples(LemmaName::Torus, 6);
        CHECK(rep.counterexamples == 0);
        CHECK(rep.holds > 0);
    }
    SUBCASE("square <= 7") {
        CampaignReport rep = search_counterexamples(LemmaName::Square, 7);
        CHECK(rep.counterexamples == 0);
    }
    SUBCASE("bigon-bound disk R_tw=6 <= 8") {
        CampaignReport rep = search_counterexamples(LemmaName::BigonBoundDisk, 8, 6);
        CHECK(rep.counterexamples == 0);
        CHECK(rep.holds > 0);  // hypothesis-satisfying instances exist at 8 edges
    }
}

TEST_CASE("cross-path: disk lemma agrees with the doubled-sphere route at <= 7 edges") {
    Constraints c;
    c.no_monogons = c.no_bigons = true;
    long long compared = 0;
    Enumerator en(Context::Disk, 7, c);
    en.run([&](const EmbeddedGraph& g) {
        LemmaVerdict direct = check_disk_lemma(g);
        if (direct.verdict == Verdict::Vacuous) return;
        EmbeddedGraph s = doubled(g, DoubleMode::DiskToSphere);
        LemmaVerdict sphere = check_sphere_lemma(s);
        REQUIRE(sphere.verdict != Verdict::Counterexample);
        // post-process: an off-boundary small vertex gives the interior clause;
        // otherwise all small vertices sit on the boundary with doubled valence
        FacesAndGenus fg = faces_and_genus(g);
        auto bmask = graph_detail::boundary_vertex_mask(g, fg.faces);
        auto val2 = s.valences();
        bool interior_small = false;
        int boundary_small = 0;
        for (int v = 0; v < g.n_vertices; ++v) {
            if (!bmask[v]) {
                if (val2[v] <= 5) interior_small = true;
            } else if (val2[v] < 6) {
                ++boundary_small;  // doubled valence 2k-2 < 6 means valence <= 3 in g
            }
        }
        for (int v = g.n_vertices; v < s.n_vertices; ++v)
            if (val2[v] <= 5) interior_small = true;
        bool via_double = interior_small || boundary_small >= 3;
        CHECK(via_double == direct.holds());
        ++compared;
    });
    CHECK(compared > 0);
}
