#pragma once

#include "twistlink/twist.hpp"

namespace twistlink {

// ---------------------------------------------------------------------------
// Crossing-circle augmentation and twist reduction.
//
// Crossing circles are stored symbolically: a region reference, the removal
// arithmetic (c, r, n_j), the surviving (associated) crossings, the punctured
// surface color and the placement flags.  The four plane crossings a circle
// would add are a drawing convention, not part of the data model.
// ---------------------------------------------------------------------------

enum class Stage { L, L_B, L0, L2, LB0, LB2 };

inline const char* stage_name(Stage s) {
    switch (s) {
        case Stage::L: return "L";
        case Stage::L_B: return "L_B";
        case Stage::L0: return "L_0";
        case Stage::L2: return "L_2";
        case Stage::LB0: return "L_B_0";
        case Stage::LB2: return "L_B_2";
    }
    return "?";
}

inline bool stage_reduced(Stage s) { return s == Stage::L0 || s == Stage::L2 || s == Stage::LB0 || s == Stage::LB2; }
inline bool stage_blue(Stage s) { return s == Stage::L_B || s == Stage::LB0 || s == Stage::LB2; }

struct NotAlternating : PreconditionError {
    NotAlternating() : PreconditionError("diagram is not alternating") {}
};
struct NoCircles : PreconditionError {
    NoCircles() : PreconditionError("augmented diagram has no crossing circles") {}
};

struct CrossingCircle {
    int id = -1;
    int region = -1;       // twist region id in the seed diagram
    int original_c = 0;    // crossings of the region in the seed
    int r = -1;            // crossings remaining after reduction (-1 before)
    int n_j = 0;           // half the removed crossings
    int sign = 0;          // handedness of the twist region
    std::vector<int> associated;  // remaining crossings (base ids), reduced stages
    Color punctured = Color::Unset;
    bool triangle_flag = false;      // r == 1: crossing and circle form a triangle
    bool bigon_thread_flag = false;  // r == 2: two arcs run through the bigon
    bool closed_region = false;      // the encircled chain was a closed cycle
    std::vector<int> site_edges;     // r == 0: base edges the circle encircles
};

struct AugmentedDiagram {
    PlanarDiagram base;
    Coloring base_coloring;  // inherited from the seed, never renormalized
    std::vector<CrossingCircle> circles;
    Stage stage = Stage::L;
    int i = -1;              // 0 or 2 once reduced
    int n_tw = 0;            // threshold used when augmenting
    std::vector<int> provenance;  // base crossing -> seed crossing
};

enum class AugmentFilter { All, Blue };

// Punctured color of a circle on the given region: the color not forming the
// region's internal bigons.  A bigon-less (c = 1) region has no intrinsic
// axis; we use the color of the face at corner 0 of its crossing.
inline Color punctured_color(const PlanarDiagram& d, const Coloring& col, const TwistRegion& r) {
    if (r.bigon_color != Color::Unset) return opposite(r.bigon_color);
    return opposite(col.of_face[d.corner_face(r.crossings.front(), 0)]);
}

inline AugmentedDiagram augment(const PlanarDiagram& d, const Coloring& col, int n_tw,
                                AugmentFilter filter = AugmentFilter::All) {
    if (n_tw < 1) throw PreconditionError("N_tw must be >= 1");
    if (!d.is_alternating()) throw NotAlternating();
    if (auto w = is_prime_witness(d)) throw NotTwistReduced(*w);
    if (auto w = twist_reduced_witness(d, col)) throw NotTwistReduced(*w);

    AugmentedDiagram out;
    out.base = d;
    out.base_coloring = col;
    out.stage = (filter == AugmentFilter::Blue) ? Stage::L_B : Stage::L;
    out.n_tw = n_tw;
    out.provenance.resize(d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c) out.provenance[c] = c;

    TwistRegions tr = twist_regions(d, col);
    for (const auto& reg : tr.regions) {
        if (reg.c < n_tw) continue;
        Color pc = punctured_color(d, col, reg);
        if (filter == AugmentFilter::Blue && pc != Color::Blue) continue;
        CrossingCircle cc;
        cc.id = static_cast<int>(out.circles.size());
        cc.region = reg.id;
        cc.original_c = reg.c;
        cc.sign = reg.sign;
        cc.punctured = pc;
        cc.closed_region = reg.closed;
        out.circles.push_back(std::move(cc));
    }
    return out;
}

namespace detail {

struct ReducedBase {
    PlanarDiagram diagram;
    Coloring coloring;
    std::vector<int> provenance;             // new crossing -> old crossing
    std::vector<int> new_of_old;             // old crossing -> new crossing or -1
    std::map<int, std::vector<int>> merged;  // new edge label -> old regions traversed
};

// Remove the given crossings and resplice by tracing strands straight through
// them (slot s continues at slot s+2).  Removing an even number of crossings
// from a twist chain this way is exactly the untwisting homeomorphism's effect
// on the diagram.  Merged edges take the smallest traversed label, then all
// labels are compacted to 1..2n preserving order.
inline ReducedBase remove_crossings(const PlanarDiagram& d, const Coloring& col, const std::vector<char>& removed,
                                    const std::vector<int>& region_of) {
    const int V = d.crossing_count();
    ReducedBase out;
    out.new_of_old.assign(V, -1);
    for (int c = 0; c < V; ++c)
        if (!removed[c]) {
            out.new_of_old[c] = static_cast<int>(out.provenance.size());
            out.provenance.push_back(c);
        }
    // nv == 0 is the fully-degenerate reduction: the base becomes the empty
    // diagram (crossing-free unknot components have no PD representation)
    const int nv = static_cast<int>(out.provenance.size());

    auto through = [&](int dart) { return 4 * (dart / 4) + (((dart % 4) + 2) & 3); };

    std::vector<std::array<int, 4>> slots(nv, {0, 0, 0, 0});
    std::vector<int> old_dart_of_new(4 * nv, -1);
    std::map<int, std::vector<int>> merged_regions;  // provisional label -> regions traversed
    std::vector<char> dart_done(4 * V, 0);
    int fresh = 0;
    std::vector<std::pair<int, std::pair<int, int>>> provisional;  // (min old label, (new dart, new dart))

    for (int c = 0; c < V; ++c) {
        if (removed[c]) continue;
        for (int s = 0; s < 4; ++s) {
            int dstart = 4 * c + s;
            if (dart_done[dstart]) continue;
            int min_label = d.label_of_dart(dstart);
            std::vector<int> regions;
            int cur = d.alpha(dstart);
            int guard = 0;
            while (removed[cur / 4]) {
                min_label = std::min(min_label, d.label_of_dart(cur));
                if (regions.empty() || regions.back() != region_of[cur / 4]) regions.push_back(region_of[cur / 4]);
                cur = d.alpha(through(cur));
                min_label = std::min(min_label, d.label_of_dart(d.alpha(cur)));
                if (++guard > 4 * V) throw PreconditionError("reduction strand never reaches a surviving crossing");
            }
            dart_done[dstart] = dart_done[cur] = 1;
            int nd1 = 4 * out.new_of_old[dstart / 4] + dstart % 4;
            int nd2 = 4 * out.new_of_old[cur / 4] + cur % 4;
            old_dart_of_new[nd1] = dstart;
            old_dart_of_new[nd2] = cur;
            provisional.push_back({min_label, {nd1, nd2}});
            merged_regions[min_label] = regions;
            ++fresh;
        }
    }
    (void)fresh;

    // compact labels preserving order of the min-labels
    std::map<int, int> label_map;
    for (const auto& [ml, dd] : provisional) {
        (void)dd;
        if (label_map.count(ml)) throw PreconditionError("label collision during resplice");
        label_map[ml] = 0;
    }
    int next = 1;
    for (auto& [ml, nl] : label_map) (void)ml, nl = next++;
    for (const auto& [ml, dd] : provisional) {
        int lab = label_map[ml];
        slots[dd.first / 4][dd.first % 4] = lab;
        slots[dd.second / 4][dd.second % 4] = lab;
        if (!merged_regions[ml].empty()) out.merged[lab] = merged_regions[ml];
    }

    out.diagram = PlanarDiagram(slots);

    // Inherit the coloring: each new face takes the color of the old faces its
    // surviving darts lay in; monochromatic merges keep this consistent.
    out.coloring.of_face.assign(out.diagram.faces().size(), Color::Unset);
    for (const auto& f : out.diagram.faces())
        for (int nd : f.darts) {
            Color old = col.of_face[d.face_of_dart(old_dart_of_new[nd])];
            if (out.coloring.of_face[f.id] == Color::Unset)
                out.coloring.of_face[f.id] = old;
            else if (out.coloring.of_face[f.id] != old)
                throw PreconditionError("face colors disagree after resplice");
        }
    return out;
}

}  // namespace detail

inline AugmentedDiagram reduce_twists(const AugmentedDiagram& L, int i) {
    if (i != 0 && i != 2) throw PreconditionError("i must be 0 or 2");
    if (stage_reduced(L.stage)) {
        if (L.i != i) throw PreconditionError("augmented diagram already reduced with different i");
        return L;  // idempotent
    }
    TwistRegions tr = twist_regions(L.base, L.base_coloring);

    std::vector<char> removed(L.base.crossing_count(), 0);
    std::vector<std::vector<int>> kept_per_circle(L.circles.size());
    for (std::size_t ci = 0; ci < L.circles.size(); ++ci) {
        const CrossingCircle& cc = L.circles[ci];
        const TwistRegion& reg = tr.regions[cc.region];
        int r = (reg.c % 2 == 1) ? 1 : i;
        for (int p = 0; p < reg.c; ++p) {
            if (p < r)
                kept_per_circle[ci].push_back(reg.crossings[p]);
            else
                removed[reg.crossings[p]] = 1;
        }
    }

    detail::ReducedBase rb = detail::remove_crossings(L.base, L.base_coloring, removed, tr.region_of);

    AugmentedDiagram out;
    out.base = rb.diagram;
    out.base_coloring = rb.coloring;
    out.stage = stage_blue(L.stage) ? (i == 0 ? Stage::LB0 : Stage::LB2) : (i == 0 ? Stage::L0 : Stage::L2);
    out.i = i;
    out.n_tw = L.n_tw;
    out.provenance.resize(rb.provenance.size());
    for (std::size_t c = 0; c < rb.provenance.size(); ++c) out.provenance[c] = L.provenance[rb.provenance[c]];

    for (std::size_t ci = 0; ci < L.circles.size(); ++ci) {
        CrossingCircle cc = L.circles[ci];
        const TwistRegion& reg = tr.regions[cc.region];
        cc.r = (reg.c % 2 == 1) ? 1 : i;
        cc.n_j = (reg.c - cc.r) / 2;
        if (cc.n_j == 0) continue;  // nothing removed (c = 2, i = 2): no circle
        cc.associated.clear();
        for (int old : kept_per_circle[ci]) cc.associated.push_back(rb.new_of_old[old]);
        std::sort(cc.associated.begin(), cc.associated.end());
        cc.triangle_flag = (cc.r == 1);
        cc.bigon_thread_flag = (cc.r == 2);
        cc.site_edges.clear();
        if (cc.r == 0) {
            for (const auto& [label, regions] : rb.merged)
                if (std::find(regions.begin(), regions.end(), cc.region) != regions.end())
                    cc.site_edges.push_back(label);
        }
        out.circles.push_back(std::move(cc));
    }
    for (std::size_t ci = 0; ci < out.circles.size(); ++ci) out.circles[ci].id = static_cast<int>(ci);
    return out;
}

// K_i: the base diagram with the circles dropped; provenance stays on the
// augmented object.
inline PlanarDiagram strip_circles(const AugmentedDiagram& Li) {
    if (!stage_reduced(Li.stage)) throw PreconditionError("strip_circles requires a reduced stage");
    return Li.base;
}

// Minimal number of crossings removed from a twist region, R_tw = min 2*n_j.
// Checks the threshold inequality for the N_tw the diagram was built with.
inline int r_tw(const AugmentedDiagram& Li) {
    if (!stage_reduced(Li.stage)) throw PreconditionError("r_tw requires a reduced stage");
    if (Li.circles.empty()) throw NoCircles();
    int best = -1;
    for (const auto& cc : Li.circles) {
        int removed = 2 * cc.n_j;
        if (best < 0 || removed < best) best = removed;
    }
    int bound = (Li.i == 0) ? 2 * (Li.n_tw / 2) : 2 * ((Li.n_tw + 1) / 2) - 2;
    if (best < bound) throw PreconditionError("R_tw fell below its threshold bound");
    return best;
}

// ---------------------------------------------------------------------------
// Structural validation of L_{B,i}
// ---------------------------------------------------------------------------

struct StructureItem {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct StructureReport {
    std::vector<StructureItem> items;
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    const StructureItem* find(const std::string& n) const {
        for (const auto& it : items)
            if (it.name == n) return &it;
        return nullptr;
    }
};

namespace detail {

// The two blue regions a circle's plane arcs pass through.
inline std::pair<int, int> circle_blue_faces(const AugmentedDiagram& a, const CrossingCircle& cc) {
    const PlanarDiagram& d = a.base;
    const Coloring& col = a.base_coloring;
    if (cc.r >= 1 && !cc.associated.empty()) {
        int x = cc.associated.front();
        int k = (col.of_face[d.corner_face(x, 0)] == Color::Blue) ? 0 : 1;
        return {d.corner_face(x, k), d.corner_face(x, k + 2)};
    }
    if (cc.site_edges.size() >= 2) {
        auto blue_side = [&](int label) {
            auto [d1, d2] = d.edge_darts(label);
            int f1 = d.face_of_dart(d1), f2 = d.face_of_dart(d2);
            return col.of_face[f1] == Color::Blue ? f1 : f2;
        };
        return {blue_side(cc.site_edges[0]), blue_side(cc.site_edges[1])};
    }
    return {-1, -1};
}

}  // namespace detail

// Checks the structural lemmas on a reduced blue-augmented diagram: distinct
// blue (and for i=2 red) regions across crossings, two distinct blue regions
// per circle, association of crossings where those regions touch, the
// association caps, and the (2,2)-torus exclusion.
inline StructureReport validate_augmented(const AugmentedDiagram& a) {
    if (!stage_reduced(a.stage)) throw PreconditionError("validate_augmented requires a reduced stage");
    const PlanarDiagram& d = a.base;
    const Coloring& col = a.base_coloring;
    StructureReport rep;

    auto diag_faces = [&](int x, Color c) {
        int k = (col.of_face[d.corner_face(x, 0)] == c) ? 0 : 1;
        return std::pair<int, int>{d.corner_face(x, k), d.corner_face(x, k + 2)};
    };

    {
        StructureItem it{"blue_regions_distinct_at_crossings", true, ""};
        for (int x = 0; x < d.crossing_count(); ++x) {
            auto [f1, f2] = diag_faces(x, Color::Blue);
            if (f1 == f2) {
                it.pass = false;
                it.witness = "crossing " + std::to_string(x) + " has one blue region on both sides (face " +
                             std::to_string(f1) + ")";
                break;
            }
        }
        rep.items.push_back(it);
    }
    if (a.i == 2) {
        StructureItem it{"red_regions_distinct_at_crossings", true, ""};
        for (int x = 0; x < d.crossing_count(); ++x) {
            auto [f1, f2] = diag_faces(x, Color::Red);
            if (f1 == f2) {
                it.pass = false;
                it.witness = "crossing " + std::to_string(x);
                break;
            }
        }
        rep.items.push_back(it);
    }
    {
        StructureItem it{"circle_meets_two_blue_regions", true, ""};
        for (const auto& cc : a.circles) {
            if (d.empty() && cc.r == 0) continue;  // nothing left of the diagram to meet
            auto [b1, b2] = detail::circle_blue_faces(a, cc);
            if (b1 < 0 || b1 == b2) {
                it.pass = false;
                it.witness = "circle " + std::to_string(cc.id) + " meets blue face " + std::to_string(b1) + " twice";
                break;
            }
        }
        rep.items.push_back(it);
    }
    {
        StructureItem it{"blue_regions_meet_only_at_associated", true, ""};
        for (const auto& cc : a.circles) {
            auto [b1, b2] = detail::circle_blue_faces(a, cc);
            if (b1 < 0 || b1 == b2) continue;
            for (int x = 0; x < d.crossing_count(); ++x) {
                bool m1 = false, m2 = false;
                for (int k = 0; k < 4; ++k) {
                    if (d.corner_face(x, k) == b1) m1 = true;
                    if (d.corner_face(x, k) == b2) m2 = true;
                }
                if (m1 && m2 &&
                    std::find(cc.associated.begin(), cc.associated.end(), x) == cc.associated.end()) {
                    it.pass = false;
                    it.witness = "crossing " + std::to_string(x) + " meets both blue regions of circle " +
                                 std::to_string(cc.id) + " but is not associated";
                }
            }
        }
        rep.items.push_back(it);
    }
    {
        StructureItem it{"association_caps", true, ""};
        for (const auto& cc : a.circles) {
            std::size_t n = cc.associated.size();
            bool ok = (a.i == 0) ? (n <= 1) : (n >= 1 && n <= 2);
            if (!ok) {
                it.pass = false;
                it.witness = "circle " + std::to_string(cc.id) + " has " + std::to_string(n) + " associated crossings";
                break;
            }
        }
        rep.items.push_back(it);
    }
    {
        StructureItem it{"torus22_exclusion", true, ""};
        if (d.crossing_count() == 2) {
            TwistRegions tr = twist_regions(d, col);
            bool is22 = tr.regions.size() == 1 && tr.regions[0].closed;
            if (is22)
                for (const auto& cc : a.circles)
                    if (cc.associated.size() == 2) {
                        it.pass = false;
                        it.witness = "circle " + std::to_string(cc.id) + " encircles both crossings of a (2,2)-torus base";
                    }
        }
        rep.items.push_back(it);
    }
    return rep;
}

}  // namespace twistlink
