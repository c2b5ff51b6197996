#pragma once

#include <optional>
#include <set>

#include "twistlink/diagram.hpp"

namespace twistlink {

// ---------------------------------------------------------------------------
// Twist regions, primality, twist-reducedness.
// ---------------------------------------------------------------------------

struct TwistRegion {
    int id = -1;
    std::vector<int> crossings;  // chain order
    int c = 0;                   // crossing count
    Color bigon_color = Color::Unset;  // Unset iff c == 1 (or mixed, see flag)
    bool closed = false;         // bigon chain closes into a cycle
    bool mixed_colors = false;   // only possible on degenerate multi-bigon links
    int sign = 0;                // common crossing sign, 0 if mixed
    std::vector<int> bigons;     // face ids of the chain's bigons
};

struct TwistRegions {
    std::vector<TwistRegion> regions;
    std::vector<int> region_of;   // crossing -> region id
    std::vector<int> curl_bigons; // bigon faces with both corners at one crossing
    int total_crossings() const {
        int t = 0;
        for (const auto& r : regions) t += r.c;
        return t;
    }
};

struct CurveWitness {
    enum class Kind { PrimeViolation, TwistReducedViolation };
    Kind kind = Kind::PrimeViolation;
    std::array<int, 2> through{};        // edge labels (prime) or crossings (twist-reduced)
    std::array<int, 2> faces{};          // the two faces the curve travels in
    std::array<std::vector<int>, 2> sides;  // crossing sets strictly on each side
};

struct NotTwistReduced : PreconditionError {
    CurveWitness witness;
    explicit NotTwistReduced(CurveWitness w)
        : PreconditionError("diagram is not twist reduced"), witness(std::move(w)) {}
};

// Per-crossing strand orientation: entry slots of the two strands, walked from
// the least-labelled edge of each link component.
struct StrandOrientation {
    std::vector<int> under_entry;  // slot in {0,2}
    std::vector<int> over_entry;   // slot in {1,3}
    std::vector<int> sign;         // +1 if over enters ccw-adjacent to under entry
};

inline StrandOrientation orient_strands(const PlanarDiagram& d) {
    const int V = d.crossing_count();
    StrandOrientation o;
    o.under_entry.assign(V, -1);
    o.over_entry.assign(V, -1);
    o.sign.assign(V, 0);
    std::set<int> seen_edges;
    for (const auto& [label, dd] : d.edges()) {
        if (seen_edges.count(label)) continue;
        // walk the component starting from the smaller dart of its least edge
        int d0 = std::min(dd.first, dd.second);
        int cur = d0;
        do {
            seen_edges.insert(d.label_of_dart(cur));
            int arrive = d.alpha(cur);
            int c = arrive / 4, s = arrive % 4;
            if (s % 2 == 0)
                o.under_entry[c] = s;
            else
                o.over_entry[c] = s;
            cur = 4 * c + ((s + 2) & 3);
        } while (cur != d0);
    }
    for (int c = 0; c < V; ++c)
        if (o.under_entry[c] >= 0 && o.over_entry[c] >= 0)
            o.sign[c] = (o.over_entry[c] == ((o.under_entry[c] + 1) & 3)) ? +1 : -1;
    return o;
}

// Maximal bigon chains.  Bigons whose two corners sit at the same crossing
// (curls) never join chains.  Crossings bigon-linked to two distinct partners
// lie in a path or cycle; a crossing never has more than two distinct partners.
inline TwistRegions twist_regions(const PlanarDiagram& d, const Coloring& col) {
    const int V = d.crossing_count();
    TwistRegions out;
    out.region_of.assign(V, -1);

    std::map<std::pair<int, int>, std::vector<int>> links;  // (x<y) -> bigon face ids
    for (const auto& f : d.faces()) {
        if (!f.is_bigon()) continue;
        int x = f.corners[0].first, y = f.corners[1].first;
        if (x == y) {
            out.curl_bigons.push_back(f.id);
            continue;
        }
        links[{std::min(x, y), std::max(x, y)}].push_back(f.id);
    }

    std::vector<std::vector<int>> nbr(V);
    for (const auto& [pr, b] : links) {
        (void)b;
        nbr[pr.first].push_back(pr.second);
        nbr[pr.second].push_back(pr.first);
    }
    for (int v = 0; v < V; ++v) {
        std::sort(nbr[v].begin(), nbr[v].end());
        nbr[v].erase(std::unique(nbr[v].begin(), nbr[v].end()), nbr[v].end());
        if (nbr[v].size() > 2)
            throw PreconditionError("crossing bigon-linked to more than two partners");
    }

    StrandOrientation ori = orient_strands(d);
    std::vector<char> used(V, 0);
    auto emit_region = [&](std::vector<int> chain, bool cycle) {
        TwistRegion r;
        r.id = static_cast<int>(out.regions.size());
        r.crossings = std::move(chain);
        r.c = static_cast<int>(r.crossings.size());
        for (int x : r.crossings) {
            used[x] = 1;
            out.region_of[x] = r.id;
        }
        int total_bigons = 0;
        for (std::size_t i = 0; i < r.crossings.size(); ++i)
            for (std::size_t j = i + 1; j < r.crossings.size(); ++j) {
                auto it = links.find({std::min(r.crossings[i], r.crossings[j]),
                                      std::max(r.crossings[i], r.crossings[j])});
                if (it != links.end())
                    for (int b : it->second) {
                        r.bigons.push_back(b);
                        ++total_bigons;
                    }
            }
        std::sort(r.bigons.begin(), r.bigons.end());
        r.closed = cycle || total_bigons >= r.c;
        if (!r.bigons.empty()) {
            r.bigon_color = col.of_face[r.bigons.front()];
            for (int b : r.bigons)
                if (col.of_face[b] != r.bigon_color) r.mixed_colors = true;
        }
        int s = r.crossings.empty() ? 0 : ori.sign[r.crossings.front()];
        for (int x : r.crossings)
            if (ori.sign[x] != s) s = 0;
        r.sign = s;
        out.regions.push_back(std::move(r));
    };

    for (int v = 0; v < V; ++v) {
        if (used[v] || nbr[v].empty()) continue;
        // find a path endpoint reachable from v, else we are on a cycle
        int start = v, prev = -1, guard = 0;
        int cur = v;
        while (true) {
            if (nbr[cur].size() == 1 && (prev == -1 || nbr[cur][0] == prev)) {
                start = cur;
                break;
            }
            int nxt = (nbr[cur][0] != prev) ? nbr[cur][0] : nbr[cur][1];
            if (nxt == v && ++guard) {
                start = -1;
                break;
            }
            prev = cur;
            cur = nxt;
            if (guard++ > V) {
                start = -1;
                break;
            }
        }
        std::vector<int> chain;
        bool cycle = (start == -1);
        if (cycle) {
            // canonical cycle order: least crossing first, towards its smaller neighbor
            int least = v;
            {
                int c2 = v, p2 = -1, g2 = 0;
                do {
                    least = std::min(least, c2);
                    int nxt = (nbr[c2][0] != p2) ? nbr[c2][0] : nbr[c2][1];
                    p2 = c2;
                    c2 = nxt;
                } while (c2 != v && g2++ <= V);
            }
            int p = least, nx = std::min(nbr[least][0], nbr[least][1]);
            chain.push_back(least);
            while (nx != least) {
                chain.push_back(nx);
                int nn = (nbr[nx][0] != p) ? nbr[nx][0] : nbr[nx][1];
                p = nx;
                nx = nn;
            }
        } else {
            // walk the path from its lesser endpoint
            int other = start, p2 = -1, c2 = start;
            while (true) {
                if (nbr[c2].size() == 1 && p2 != -1) {
                    other = c2;
                    break;
                }
                int nxt = (nbr[c2][0] != p2) ? nbr[c2][0] : (nbr[c2].size() > 1 ? nbr[c2][1] : -1);
                if (nxt == -1) {
                    other = c2;
                    break;
                }
                p2 = c2;
                c2 = nxt;
            }
            int from = std::min(start, other);
            chain.push_back(from);
            int p = -1, c3 = from;
            while (true) {
                int nxt = -1;
                for (int nn : nbr[c3])
                    if (nn != p) nxt = nn;
                if (nxt == -1) break;
                chain.push_back(nxt);
                p = c3;
                c3 = nxt;
            }
        }
        emit_region(std::move(chain), cycle);
    }
    // lone crossings
    for (int v = 0; v < V; ++v)
        if (!used[v]) emit_region({v}, false);

    std::sort(out.regions.begin(), out.regions.end(),
              [](const TwistRegion& a, const TwistRegion& b) { return a.crossings.front() < b.crossings.front(); });
    for (std::size_t i = 0; i < out.regions.size(); ++i) {
        out.regions[i].id = static_cast<int>(i);
        for (int x : out.regions[i].crossings) out.region_of[x] = static_cast<int>(i);
    }
    return out;
}

// ---------------------------------------------------------------------------
// is_prime
// ---------------------------------------------------------------------------

namespace detail {

// Connected components of the crossing graph with the given edge labels removed.
inline std::vector<int> crossing_components(const PlanarDiagram& d, int skip1, int skip2) {
    const int V = d.crossing_count();
    std::vector<int> comp(V, -1);
    int n = 0;
    for (int v0 = 0; v0 < V; ++v0) {
        if (comp[v0] != -1) continue;
        comp[v0] = n;
        std::vector<int> stack{v0};
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                int dd = 4 * c + s;
                int lab = d.label_of_dart(dd);
                if (lab == skip1 || lab == skip2) continue;
                int o = d.alpha(dd) / 4;
                if (comp[o] == -1) {
                    comp[o] = n;
                    stack.push_back(o);
                }
            }
        }
        ++n;
    }
    return comp;
}

}  // namespace detail

// Returns nullopt when prime, else a witness curve.  A violating curve through
// edges e1 != e2 exists iff the two edges share both faces and deleting them
// separates the crossings into two nonempty parts; the self-pair case is a
// bridge, which cannot occur on a properly two-colorable diagram but is
// checked anyway.
inline std::optional<CurveWitness> is_prime_witness(const PlanarDiagram& d) {
    if (d.crossing_count() <= 1) return std::nullopt;
    // bridges
    for (const auto& [label, dd] : d.edges()) {
        if (d.face_of_dart(dd.first) != d.face_of_dart(dd.second)) continue;
        auto comp = detail::crossing_components(d, label, label);
        int c1 = dd.first / 4, c2 = dd.second / 4;
        if (comp[c1] != comp[c2]) {
            CurveWitness w;
            w.kind = CurveWitness::Kind::PrimeViolation;
            w.through = {label, label};
            w.faces = {d.face_of_dart(dd.first), d.face_of_dart(dd.first)};
            for (int c = 0; c < d.crossing_count(); ++c)
                w.sides[comp[c] == comp[c1] ? 0 : 1].push_back(c);
            return w;
        }
    }
    // edge pairs sharing both faces
    std::vector<std::pair<int, std::pair<int, int>>> edge_faces;
    for (const auto& [label, dd] : d.edges()) {
        int f1 = d.face_of_dart(dd.first), f2 = d.face_of_dart(dd.second);
        edge_faces.push_back({label, {std::min(f1, f2), std::max(f1, f2)}});
    }
    for (std::size_t i = 0; i < edge_faces.size(); ++i)
        for (std::size_t j = i + 1; j < edge_faces.size(); ++j) {
            if (edge_faces[i].second != edge_faces[j].second) continue;
            int l1 = edge_faces[i].first, l2 = edge_faces[j].first;
            auto comp = detail::crossing_components(d, l1, l2);
            auto [d1, d2] = d.edge_darts(l1);
            if (comp[d1 / 4] == comp[d2 / 4]) continue;
            std::array<std::vector<int>, 2> sides;
            for (int c = 0; c < d.crossing_count(); ++c)
                sides[comp[c] == comp[d1 / 4] ? 0 : 1].push_back(c);
            if (sides[0].empty() || sides[1].empty()) continue;
            CurveWitness w;
            w.kind = CurveWitness::Kind::PrimeViolation;
            w.through = {l1, l2};
            w.faces = {edge_faces[i].second.first, edge_faces[i].second.second};
            w.sides = std::move(sides);
            return w;
        }
    return std::nullopt;
}

inline bool is_prime(const PlanarDiagram& d) { return !is_prime_witness(d).has_value(); }

// ---------------------------------------------------------------------------
// is_twist_reduced / is_color_twist_reduced
// ---------------------------------------------------------------------------

namespace detail {

// Split the diagram's darts along the curve through crossings x, y entering and
// leaving at the given corner intervals.  Returns the crossings strictly on
// each side.  The sigma step from (c,s) to (c,s+1) passes corner (c,s).
inline std::array<std::vector<int>, 2> curve_sides(const PlanarDiagram& d, int x, int kx, int y, int my) {
    auto cut = [&](int c, int s) {
        s &= 3;
        return (c == x && (s == (kx & 3) || s == ((kx + 2) & 3))) ||
               (c == y && (s == (my & 3) || s == ((my + 2) & 3)));
    };
    const int n = 4 * d.crossing_count();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int d0 = 0; d0 < n; ++d0) {
        if (comp[d0] != -1) continue;
        comp[d0] = ncomp;
        std::vector<int> stack{d0};
        while (!stack.empty()) {
            int dd = stack.back();
            stack.pop_back();
            int others[2] = {d.alpha(dd), -1};
            if (!cut(dd / 4, dd % 4)) others[1] = d.sigma(dd);
            int prev = 4 * (dd / 4) + ((dd % 4 + 3) & 3);
            for (int o : others)
                if (o >= 0 && comp[o] == -1) {
                    comp[o] = ncomp;
                    stack.push_back(o);
                }
            if (!cut(prev / 4, prev % 4) && comp[prev] == -1) {  // sigma edge arriving at dd
                comp[prev] = ncomp;
                stack.push_back(prev);
            }
        }
        ++ncomp;
    }
    if (ncomp != 2) throw PreconditionError("curve does not split the sphere in two");
    std::array<std::vector<int>, 2> sides;
    for (int c = 0; c < d.crossing_count(); ++c) {
        if (c == x || c == y) continue;
        int side = comp[4 * c];
        for (int s = 1; s < 4; ++s)
            if (comp[4 * c + s] != side) throw PreconditionError("curve crosses an off-curve crossing");
        sides[side].push_back(c);
    }
    return sides;
}

// Does `side` consist exactly of the chain crossings strictly between x and y
// in their common twist region (either arc on a closed chain)?
inline bool side_is_bigon_string(const TwistRegions& tr, int x, int y, const std::vector<int>& side) {
    if (side.empty()) return true;  // empty string of bigons
    if (tr.region_of[x] != tr.region_of[y]) return false;
    const TwistRegion& r = tr.regions[tr.region_of[x]];
    auto pos = [&](int c) {
        return static_cast<int>(std::find(r.crossings.begin(), r.crossings.end(), c) - r.crossings.begin());
    };
    int i = pos(x), j = pos(y);
    std::set<int> sideset(side.begin(), side.end());
    auto arc_matches = [&](int from, int to) {
        // crossings strictly between positions from..to walking forward (mod c)
        std::set<int> between;
        for (int p = (from + 1) % r.c; p != to; p = (p + 1) % r.c) {
            between.insert(r.crossings[p]);
            if (!r.closed && p == 0) return false;  // wrapped on an open chain
        }
        return between == sideset;
    };
    if (!r.closed) {
        int a = std::min(i, j), b = std::max(i, j);
        std::set<int> between(r.crossings.begin() + a + 1, r.crossings.begin() + b);
        return between == sideset;
    }
    return arc_matches(i, j) || arc_matches(j, i);
}

}  // namespace detail

// Shared scan.  `restrict_color`: only consider curves whose two faces carry
// that color (blue- or red-twist-reducedness); nullopt checks all curves.
inline std::optional<CurveWitness> twist_reduced_witness(const PlanarDiagram& d, const Coloring& col,
                                                         std::optional<Color> restrict_color = std::nullopt) {
    const int V = d.crossing_count();
    TwistRegions tr = twist_regions(d, col);
    for (int x = 0; x < V; ++x)
        for (int y = x + 1; y < V; ++y)
            for (int kx = 0; kx < 2; ++kx) {
                int F1 = d.corner_face(x, kx), F2 = d.corner_face(x, kx + 2);
                if (F1 == F2) continue;
                if (restrict_color && col.of_face[F1] != *restrict_color) continue;
                for (int my = 0; my < 4; ++my) {
                    if (d.corner_face(y, my) != F1 || d.corner_face(y, (my + 2) & 3) != F2) continue;
                    auto sides = detail::curve_sides(d, x, kx, y, my);
                    if (detail::side_is_bigon_string(tr, x, y, sides[0]) ||
                        detail::side_is_bigon_string(tr, x, y, sides[1]))
                        continue;
                    CurveWitness w;
                    w.kind = CurveWitness::Kind::TwistReducedViolation;
                    w.through = {x, y};
                    w.faces = {F1, F2};
                    w.sides = std::move(sides);
                    return w;
                }
            }
    return std::nullopt;
}

inline bool is_twist_reduced(const PlanarDiagram& d, const Coloring& col) {
    return !twist_reduced_witness(d, col).has_value();
}

inline bool is_color_twist_reduced(const PlanarDiagram& d, const Coloring& col, Color color) {
    return !twist_reduced_witness(d, col, color).has_value();
}

// Twist number of a twist-reduced diagram; refuses non-prime and
// non-twist-reduced input, the latter with the witness attached.
inline int twist_number(const PlanarDiagram& d, const Coloring& col) {
    if (auto w = is_prime_witness(d)) throw NotTwistReduced(*w);
    if (auto w = twist_reduced_witness(d, col)) throw NotTwistReduced(*w);
    return static_cast<int>(twist_regions(d, col).regions.size());
}

}  // namespace twistlink
