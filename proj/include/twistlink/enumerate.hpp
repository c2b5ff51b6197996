#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <deque>
#include <functional>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "twistlink/embedded_graph.hpp"

namespace twistlink {

// ---------------------------------------------------------------------------
// Isomorph-free exhaustive enumeration of connected embedded multigraphs.
//
// Generation grows maps edge by edge: a pendant edge into a face corner, a
// chord between two corners of one face (same-corner chords are trivial
// loops), and, when the target is the torus, a handle edge between corners of
// two distinct faces.  Each state is canonicalized as the lexicographically
// least breadth-first trace over all starting darts, taking rotations both
// ways on reflection-blind surfaces (sphere, disk, square, annulus) and one
// way on the torus.  Constraint-violating faces ("defects") are pruned with
// the invariant that every defective face needs at least one more edge.
// ---------------------------------------------------------------------------

struct CapExceeded : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct Constraints {
    bool no_monogons = false;
    bool no_bigons = false;
    int min_vertices = 0;
    // valence schedule (bigon-bound campaigns); 0 disables a clause
    int interior_valence_min = 0;
    int boundary_valence_min = 0;
    int max_exceptions = 0;  // boundary vertices allowed below the schedule
    // valence-schedule presets (multiples arise for crossing-circle graphs)
    int interior_valence_multiple_of = 0;
    bool boundary_only = false;  // instances whose edges all lie on the boundary
};

inline int default_edge_cap() {
    if (const char* env = std::getenv("TWISTLINK_MAX_EDGES")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 14;
}

namespace enum_detail {

struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
        return p.first ^ (p.second * 0x9e3779b97f4a7c15ULL);
    }
};

// Breadth-first trace from a root dart with early abort against the best
// trace so far; `mirror` walks rotations backwards.  Returns true when the
// trace was strictly smaller and replaced `best`.  All traces of a connected
// map have the same length, so prefix comparison is sound.  Dart ids are
// epoch-stamped so successive traces need no clearing pass.
inline bool trace_better(const EmbeddedGraph& g, const int* sig, const std::vector<int>* flags, int root,
                         std::vector<std::int32_t>& best, std::vector<std::int32_t>& scratch, std::vector<int>& id,
                         std::vector<int>& stamp, int epoch, std::vector<int>& order) {
    const int n = g.dart_count();
    const std::size_t len = 2 * static_cast<std::size_t>(n) + 2;
    if (scratch.size() < len) scratch.resize(len);
    int reached = 1;
    order[0] = root;
    id[root] = 0;
    stamp[root] = epoch;
    const bool fresh = best.size() != len;  // no comparable best yet
    int cmp = fresh ? -1 : 0;               // -1: already smaller, 0: equal so far
    std::size_t w = 0;
    const std::int32_t* bp = fresh ? nullptr : best.data();
    std::int32_t* sp = scratch.data();
    const int* fl = flags ? flags->data() : nullptr;
    for (int k = 0; k < n; ++k) {
        if (k >= reached) throw PreconditionError("canonical trace requires a connected graph");
        int d = order[k];
        int s = sig[d];
        int a = d ^ 1;
        if (stamp[s] != epoch) {
            stamp[s] = epoch;
            id[s] = reached;
            order[reached++] = s;
        }
        if (stamp[a] != epoch) {
            stamp[a] = epoch;
            id[a] = reached;
            order[reached++] = a;
        }
        // pack the dart's mark bits into the low bits of the sigma id
        std::int32_t e0 = (id[s] << 3) | (fl ? fl[d] : 0), e1 = id[a];
        if (cmp == 0) {
            if (e0 != bp[w]) {
                if (e0 > bp[w]) return false;
                cmp = -1;
            } else if (e1 != bp[w + 1]) {
                if (e1 > bp[w + 1]) return false;
                cmp = -1;
            }
        }
        sp[w] = e0;
        sp[w + 1] = e1;
        w += 2;
    }
    std::int32_t tail0 = reached, tail1 = g.n_vertices;
    if (cmp == 0) {
        if (tail0 != bp[w]) {
            if (tail0 > bp[w]) return false;
            cmp = -1;
        } else if (tail1 != bp[w + 1]) {
            if (tail1 > bp[w + 1]) return false;
            cmp = -1;
        }
    }
    sp[w] = tail0;
    sp[w + 1] = tail1;
    if (cmp == -1) {
        best.swap(scratch);
        best.resize(len);
        return true;
    }
    return false;
}

inline std::pair<std::uint64_t, std::uint64_t> canonical_hash(const EmbeddedGraph& g) {
    const int n = g.dart_count();
    if (n == 0) return {0x736f6c6fULL ^ static_cast<std::uint64_t>(g.n_vertices), 0};
    static thread_local std::vector<int> sigma_inv, id, stamp, order, flags, roots, val;
    static thread_local int epoch = 0;
    static thread_local std::vector<std::int32_t> best, scratch;
    sigma_inv.resize(n);
    for (int d = 0; d < n; ++d) sigma_inv[g.sigma[d]] = d;
    if (static_cast<int>(stamp.size()) < n) {
        stamp.assign(n, -1);
        id.resize(n);
        order.resize(n);
        epoch = 0;
    }
    if (static_cast<int>(order.size()) < n) order.resize(n);

    val.assign(g.n_vertices, 0);
    for (int d = 0; d < n; ++d) ++val[g.vertex_of[d]];

    // flags are only needed when the graph carries marks
    bool has_flags = g.outer_dart >= 0 || g.outer_dart2 >= 0 || !g.exceptional.empty();
    for (char s : g.side_edge) has_flags = has_flags || s;
    if (has_flags) {
        flags.assign(n, 0);
        for (int od : {g.outer_dart, g.outer_dart2}) {
            if (od < 0) continue;
            int d = od;
            do {
                flags[d] |= 1;
                d = g.sigma[EmbeddedGraph::twin(d)];
            } while (d != od);
        }
        for (int d = 0; d < n; ++d)
            if (g.is_side(d / 2)) flags[d] |= 2;
        if (!g.exceptional.empty()) {
            std::set<int> except(g.exceptional.begin(), g.exceptional.end());
            for (int d = 0; d < n; ++d)
                if (except.count(g.vertex_of[d])) flags[d] |= 4;
        }
    }

    // roots: isomorphisms respect marks and valences, so anchor at marked-face
    // darts when marks exist, restricted to the minimum (valence, twin-valence)
    // endpoint signature
    roots.clear();
    auto dart_key = [&](int d) {
        return std::pair<int, int>{val[g.vertex_of[d]], val[g.vertex_of[d ^ 1]]};
    };
    if (g.outer_dart >= 0) {
        std::pair<int, int> mn{INT32_MAX, INT32_MAX};
        for (int od : {g.outer_dart, g.outer_dart2}) {
            if (od < 0) continue;
            int d = od;
            do {
                mn = std::min(mn, dart_key(d));
                d = g.sigma[EmbeddedGraph::twin(d)];
            } while (d != od);
        }
        for (int od : {g.outer_dart, g.outer_dart2}) {
            if (od < 0) continue;
            int d = od;
            do {
                if (dart_key(d) == mn) roots.push_back(d);
                d = g.sigma[EmbeddedGraph::twin(d)];
            } while (d != od);
        }
    } else {
        std::pair<int, int> mn{INT32_MAX, INT32_MAX};
        for (int d = 0; d < n; ++d) mn = std::min(mn, dart_key(d));
        for (int d = 0; d < n; ++d)
            if (dart_key(d) == mn) roots.push_back(d);
    }

    bool reflections = g.context != Context::Torus;
    best.clear();
    const std::vector<int>* fl = has_flags ? &flags : nullptr;
    for (int root : roots) {
        trace_better(g, g.sigma.data(), fl, root, best, scratch, id, stamp, ++epoch, order);
        if (reflections) trace_better(g, sigma_inv.data(), fl, root, best, scratch, id, stamp, ++epoch, order);
    }
    Digest128 dg = digest128(best.data(), best.size() * sizeof(std::int32_t));
    return {dg.lo, dg.hi};
}

// number of constraint-violating faces; each needs at least one more edge
inline int defect_count(const EmbeddedGraph& g, const Constraints& c, const FaceSet& fs) {
    if (!c.no_monogons && !c.no_bigons) return 0;
    int defects = 0;
    for (int f = 0; f < static_cast<int>(fs.cycles.size()); ++f) {
        if (graph_detail::is_marked(g, fs, f)) continue;
        const auto& cyc = fs.cycles[f];
        if (cyc.size() == 1 && c.no_monogons && !g.is_side(cyc[0] / 2)) ++defects;
        if (cyc.size() == 2 && c.no_bigons && cyc[0] / 2 != cyc[1] / 2 && !g.is_side(cyc[0] / 2) &&
            !g.is_side(cyc[1] / 2))
            ++defects;
    }
    return defects;
}

// single-pass face census for the generation hot path (connected maps)
struct QuickFaces {
    int faces = 0;
    int defects = 0;
};

inline QuickFaces quick_faces(const EmbeddedGraph& g, const Constraints& c, std::vector<char>& visited) {
    const int n = g.dart_count();
    visited.assign(n, 0);
    QuickFaces out;
    for (int d0 = 0; d0 < n; ++d0) {
        if (visited[d0]) continue;
        ++out.faces;
        int deg = 0;
        int d = d0;
        int first = -1, second = -1;
        bool marked = false, any_side = false;
        do {
            visited[d] = 1;
            if (deg == 0) first = d;
            if (deg == 1) second = d;
            ++deg;
            if (d == g.outer_dart || d == g.outer_dart2) marked = true;
            if (g.is_side(d / 2)) any_side = true;
            d = g.sigma[EmbeddedGraph::twin(d)];
        } while (d != d0);
        if (marked) continue;
        if (deg == 1 && c.no_monogons && !any_side) ++out.defects;
        if (deg == 2 && c.no_bigons && !any_side && first / 2 != second / 2) ++out.defects;
    }
    return out;
}

}  // namespace enum_detail

class Enumerator {
  public:
    Enumerator(Context context, int max_edges, Constraints constraints, int hard_cap = default_edge_cap())
        : context_(context), max_edges_(max_edges), constraints_(constraints) {
        if (max_edges > hard_cap)
            throw CapExceeded("max_edges " + std::to_string(max_edges) + " exceeds the configured cap " +
                              std::to_string(hard_cap));
    }

    long long states_visited() const { return states_; }

    // Work-stealing exploration over a shared, sharded seen-set.  The callback
    // runs concurrently from workers and must be thread-safe; the instance set
    // (and so every count) does not depend on the schedule.
    void run_parallel(const std::function<void(const EmbeddedGraph&)>& yield,
                      unsigned threads = std::thread::hardware_concurrency()) {
        if (threads <= 1 || context_ == Context::Annulus) {
            run(yield);
            return;
        }
        struct Shard {
            std::mutex mu;
            std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, enum_detail::PairHash> set;
        };
        std::vector<Shard> shards(64);
        auto shared_insert = [&](const std::pair<std::uint64_t, std::uint64_t>& key) {
            Shard& s = shards[key.first & 63];
            std::lock_guard<std::mutex> lock(s.mu);
            return s.set.insert(key).second;
        };
        std::atomic<long long> total_states{0};

        std::mutex qmu;
        std::condition_variable qcv;
        std::deque<EmbeddedGraph> queue;
        int pending = 0;  // queued + running tasks, guarded by qmu
        const int split_edges = std::max(1, max_edges_ - 6);

        std::function<void(const EmbeddedGraph&)> process = [&](const EmbeddedGraph& g) {
            if (g.edge_count() >= max_edges_) return;
            for_each_child(g, [&](const EmbeddedGraph& child) {
                auto key = enum_detail::canonical_hash(child);
                if (!shared_insert(key)) return;
                ++total_states;
                if (eligible(child)) yield(child);
                if (child.edge_count() >= max_edges_) return;
                EmbeddedGraph kept = child;  // the generation scratch is reused below us
                if (kept.edge_count() <= split_edges) {
                    std::lock_guard<std::mutex> lock(qmu);
                    queue.push_back(std::move(kept));
                    ++pending;
                    qcv.notify_one();
                } else {
                    process(kept);
                }
            });
        };

        // seed
        std::vector<EmbeddedGraph> roots = make_roots();
        for (auto& r : roots) {
            auto key = enum_detail::canonical_hash(r);
            if (!shared_insert(key)) continue;
            ++total_states;
            if (eligible(r)) yield(r);
            if (r.edge_count() < max_edges_) {
                std::lock_guard<std::mutex> lock(qmu);
                queue.push_back(std::move(r));
                ++pending;
            }
        }

        auto worker = [&] {
            std::unique_lock<std::mutex> lock(qmu);
            for (;;) {
                qcv.wait(lock, [&] { return !queue.empty() || pending == 0; });
                if (queue.empty()) {
                    if (pending == 0) break;
                    continue;
                }
                EmbeddedGraph g = std::move(queue.front());
                queue.pop_front();
                lock.unlock();
                process(g);
                lock.lock();
                --pending;
                if (pending == 0 || !queue.empty()) qcv.notify_all();
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        states_ = total_states;
    }

    // Streams every instance (constraint-satisfying graph) exactly once.
    void run(const std::function<void(const EmbeddedGraph&)>& yield) {
        yield_ = &yield;
        seen_.clear();
        states_ = 0;
        switch (context_) {
            case Context::Sphere:
            case Context::Torus: {
                EmbeddedGraph root;
                root.n_vertices = 1;
                root.context = context_;
                dfs(root, true);
                break;
            }
            case Context::Disk: {
                for (int b = 1; b <= max_edges_; ++b) dfs(cycle_root(b), true);
                break;
            }
            case Context::Square: {
                for (int w = 1; w <= max_edges_; ++w)
                    for (int e = 1; w + e <= max_edges_; ++e)
                        for (int p = 0; w + e + p <= max_edges_; ++p)
                            for (int q = 0; w + e + p + q <= max_edges_; ++q) dfs(square_root(w, e, p, q), true);
                break;
            }
            case Context::Annulus: {
                // connected annulus graphs: disk instances with a second marked
                // interior face that is a simple cycle
                Enumerator inner(Context::Disk, max_edges_, constraints_);
                inner.yield_ = nullptr;
                std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, enum_detail::PairHash> seen2;
                inner.run([&](const EmbeddedGraph& d) {
                    FacesAndGenus fg = faces_and_genus(d, false);
                    int outer = fg.faces.face_of[d.outer_dart];
                    for (int f = 0; f < static_cast<int>(fg.faces.cycles.size()); ++f) {
                        if (f == outer || !graph_detail::face_is_simple_cycle(d, fg.faces, f)) continue;
                        EmbeddedGraph a = d;
                        a.context = Context::Annulus;
                        a.outer_dart2 = fg.faces.cycles[f].front();
                        auto key = enum_detail::canonical_hash(a);
                        if (!seen2.insert(key).second) continue;
                        if (eligible(a)) (*yield_)(a);
                    }
                });
                break;
            }
        }
    }

  private:
    Context context_;
    int max_edges_;
    Constraints constraints_;
    const std::function<void(const EmbeddedGraph&)>* yield_ = nullptr;
    std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, enum_detail::PairHash> seen_;
    long long states_ = 0;

    EmbeddedGraph cycle_root(int b) {
        std::vector<std::pair<int, int>> edges;
        std::vector<std::vector<int>> rot(b);
        if (b == 1) {
            edges.push_back({0, 0});
            rot[0] = {0, 0};
        } else {
            for (int i = 0; i < b; ++i) edges.push_back({i, (i + 1) % b});
            for (int i = 0; i < b; ++i) rot[i] = {(i + b - 1) % b, i};
        }
        EmbeddedGraph g = from_rotations(b, edges, rot, Context::Disk);
        g.outer_dart = 0;
        return g;
    }

    // boundary: W rail of w edges, N arc with p attachment points, E rail of e
    // edges, S arc with q attachment points
    EmbeddedGraph square_root(int w, int e, int p, int q) {
        // vertices in boundary cycle order: W path (w+1), N zone (p), E path
        // reversed (e+1), S zone (q)
        int total = (w + 1) + p + (e + 1) + q;
        std::vector<std::pair<int, int>> edges;
        std::vector<char> side;
        std::vector<int> cyc;  // vertex cycle
        for (int i = 0; i <= w; ++i) cyc.push_back(i);
        for (int i = 0; i < p; ++i) cyc.push_back(w + 1 + i);
        for (int i = 0; i <= e; ++i) cyc.push_back(w + 1 + p + i);
        for (int i = 0; i < q; ++i) cyc.push_back(w + 1 + p + e + 1 + i);
        std::vector<std::vector<int>> rot(total);
        for (int i = 0; i < total; ++i) {
            int u = cyc[i], v = cyc[(i + 1) % total];
            bool is_rail = (i < w) || (i > w + p && i <= w + p + e);
            edges.push_back({u, v});
            side.push_back(is_rail ? 0 : 1);
        }
        for (int i = 0; i < total; ++i) {
            int prev_edge = (i + total - 1) % total;
            rot[cyc[i]] = {prev_edge, i};
        }
        EmbeddedGraph g = from_rotations(total, edges, rot, Context::Square);
        g.side_edge = side;
        g.outer_dart = 0;
        // make sure dart 0 lies on the intended outer face
        FacesAndGenus fg = faces_and_genus(g, false);
        // the outer face is the one traversing every boundary edge once; both
        // faces of the bare cycle qualify, so dart 0's face is fine
        (void)fg;
        return g;
    }

    bool eligible(const EmbeddedGraph& g) {
        if (g.dart_count() == 0) return constraints_.min_vertices <= 1 && context_ == Context::Sphere &&
                                        !constraints_.boundary_only;
        static thread_local graph_detail::LightAnalysis a;
        graph_detail::analyze_light(g, a);
        if (!a.connected) return false;
        int want = (context_ == Context::Torus) ? 1 : 0;
        if (a.genus != want) return false;
        if ((constraints_.no_monogons && a.monogons) || (constraints_.no_bigons && a.bigons)) return false;
        if (g.n_vertices < constraints_.min_vertices) return false;
        if (!a.marked_simple) return false;
        if (context_ == Context::Square && !a.zone_valences_ok) return false;

        if (constraints_.boundary_only) {
            int boundary_edges = 0;
            for (int od : {g.outer_dart, g.outer_dart2}) {
                if (od < 0) continue;
                int d = od;
                do {
                    ++boundary_edges;
                    d = g.sigma[EmbeddedGraph::twin(d)];
                } while (d != od);
            }
            if (boundary_edges != g.edge_count()) return false;
        }
        if (constraints_.interior_valence_min > 0 || constraints_.boundary_valence_min > 0 ||
            constraints_.interior_valence_multiple_of > 0) {
            int exceptions = 0;
            for (int v = 0; v < g.n_vertices; ++v) {
                if (a.zone_skip[v]) continue;
                if (a.bmask[v]) {
                    if (a.valence[v] < constraints_.boundary_valence_min) ++exceptions;
                } else {
                    if (a.valence[v] < constraints_.interior_valence_min) return false;
                    if (constraints_.interior_valence_multiple_of > 0 &&
                        (a.valence[v] == 0 || a.valence[v] % constraints_.interior_valence_multiple_of != 0))
                        return false;
                }
            }
            if (exceptions > constraints_.max_exceptions) return false;
        }
        return true;
    }

    std::vector<EmbeddedGraph> make_roots() {
        std::vector<EmbeddedGraph> roots;
        switch (context_) {
            case Context::Sphere:
            case Context::Torus: {
                EmbeddedGraph root;
                root.n_vertices = 1;
                root.context = context_;
                roots.push_back(root);
                break;
            }
            case Context::Disk:
                for (int b = 1; b <= max_edges_; ++b) roots.push_back(cycle_root(b));
                break;
            case Context::Square:
                for (int w = 1; w <= max_edges_; ++w)
                    for (int e = 1; w + e <= max_edges_; ++e)
                        for (int p = 0; w + e + p <= max_edges_; ++p)
                            for (int q = 0; w + e + p + q <= max_edges_; ++q) roots.push_back(square_root(w, e, p, q));
                break;
            case Context::Annulus:
                break;
        }
        return roots;
    }

    void dfs(const EmbeddedGraph& g, bool is_root) {
        if (is_root) {
            auto key = enum_detail::canonical_hash(g);
            if (!seen_.insert(key).second) return;
            ++states_;
            if (yield_ && eligible(g)) (*yield_)(g);
        }
        if (g.edge_count() >= max_edges_) return;
        for_each_child(g, [&](const EmbeddedGraph& child) {
            auto key = enum_detail::canonical_hash(child);
            if (!seen_.insert(key).second) return;
            ++states_;
            if (yield_ && eligible(child)) (*yield_)(child);
            if (child.edge_count() >= max_edges_) return;
            EmbeddedGraph kept = child;  // the scratch is reused below us
            dfs(kept, false);
        });
    }

    // Generate the filter-surviving children of g.  Children are built in a
    // thread-local scratch graph: callees must copy whatever they keep.
    template <class F>
    void for_each_child(const EmbeddedGraph& g, F&& fn) {
        static thread_local EmbeddedGraph scratch;
        auto base_copy = [&]() -> EmbeddedGraph& {
            scratch.sigma.assign(g.sigma.begin(), g.sigma.end());
            scratch.vertex_of.assign(g.vertex_of.begin(), g.vertex_of.end());
            scratch.side_edge.assign(g.side_edge.begin(), g.side_edge.end());
            scratch.exceptional.assign(g.exceptional.begin(), g.exceptional.end());
            scratch.n_vertices = g.n_vertices;
            scratch.context = g.context;
            scratch.outer_dart = g.outer_dart;
            scratch.outer_dart2 = g.outer_dart2;
            scratch.cellular = g.cellular;
            return scratch;
        };

        // empty map: seed with a single edge or a loop
        if (g.dart_count() == 0) {
            EmbeddedGraph& c = base_copy();
            c.n_vertices = 2;
            c.sigma = {0, 1};
            c.vertex_of = {0, 1};
            fn(c);
            EmbeddedGraph& c2 = base_copy();
            c2.n_vertices = 1;
            c2.sigma = {1, 0};
            c2.vertex_of = {0, 0};
            fn(c2);
            return;
        }

        // flat face walk of the parent (locals: for_each_child recurses via fn)
        std::vector<int> face_of, face_darts, face_start;
        const int n = g.dart_count();
        face_of.assign(n, -1);
        face_darts.reserve(n);
        face_start.reserve(n / 2 + 2);
        int n_faces = 0;
        for (int d0 = 0; d0 < n; ++d0) {
            if (face_of[d0] != -1) continue;
            face_start.push_back(static_cast<int>(face_darts.size()));
            int d = d0;
            do {
                face_of[d] = n_faces;
                face_darts.push_back(d);
                d = g.sigma[d ^ 1];
            } while (d != d0);
            ++n_faces;
        }
        face_start.push_back(static_cast<int>(face_darts.size()));
        const int genus = (2 - (g.n_vertices - g.edge_count() + n_faces)) / 2;

        int marked1 = g.outer_dart >= 0 ? face_of[g.outer_dart] : -1;
        int marked2 = g.outer_dart2 >= 0 ? face_of[g.outer_dart2] : -1;

        // Every future edge can repair at most one defective face, except the
        // one genus-raising handle (torus), which can repair two at once.
        const int target_genus = (context_ == Context::Torus) ? 1 : 0;
        static thread_local std::vector<char> scratch_visited;
        const bool simple_flags = g.side_edge.empty();
        const bool track_defects = constraints_.no_monogons || constraints_.no_bigons;
        int parent_defects = 0;
        if (track_defects)
            parent_defects = enum_detail::quick_faces(g, constraints_, scratch_visited).defects;
        auto part_defect = [&](int deg) {
            return (deg == 1 && constraints_.no_monogons) || (deg == 2 && constraints_.no_bigons);
        };

        // known_defects/known_genus: exact when side edges are absent; a
        // negative defect count requests a full recount (square context).
        auto try_child = [&](EmbeddedGraph& child, int known_defects, int known_genus) {
            int defects = known_defects;
            int child_genus = known_genus;
            if (defects < 0) {
                enum_detail::QuickFaces qf = enum_detail::quick_faces(child, constraints_, scratch_visited);
                defects = qf.defects;
                child_genus = (2 - (child.n_vertices - child.edge_count() + qf.faces)) / 2;
            }
            int slack = (max_edges_ - child.edge_count()) + (target_genus - child_genus);
            if (defects > slack) return;
            if (!valence_prune(child)) return;
            fn(child);
        };

        auto chord_child = [&](int da, int db, int known_defects, int known_genus) {
            EmbeddedGraph& c = base_copy();
            int x = c.dart_count(), y = x + 1;
            int t1 = da ^ 1, t2 = db ^ 1;
            c.sigma.push_back(-1);
            c.sigma.push_back(-1);
            c.vertex_of.push_back(g.vertex_of[t1]);
            c.vertex_of.push_back(g.vertex_of[t2]);
            if (!c.side_edge.empty() || c.context == Context::Square) c.side_edge.resize(c.dart_count() / 2, 0);
            if (da == db) {
                c.sigma[t1] = x;
                c.sigma[x] = y;
                c.sigma[y] = g.sigma[t1];
            } else {
                c.sigma[x] = g.sigma[t1];
                c.sigma[t1] = x;
                c.sigma[y] = g.sigma[t2];
                c.sigma[t2] = y;
            }
            try_child(c, known_defects, known_genus);
        };

        for (int f = 0; f < n_faces; ++f) {
            if (f == marked1 || f == marked2) continue;
            const int* cyc = face_darts.data() + face_start[f];
            const int deg = face_start[f + 1] - face_start[f];
            bool face_was_defect = false;
            if (simple_flags && track_defects)
                face_was_defect = (deg == 1 && constraints_.no_monogons) ||
                                  (deg == 2 && constraints_.no_bigons && cyc[0] / 2 != cyc[1] / 2);
            const int base_after = parent_defects - (face_was_defect ? 1 : 0);
            for (int i = 0; i < deg; ++i) {
                // pendant into the corner after cyc[i]
                {
                    EmbeddedGraph& c = base_copy();
                    int x = c.dart_count(), y = x + 1;
                    int t = cyc[i] ^ 1;
                    c.sigma.push_back(g.sigma[t]);  // x
                    c.sigma.push_back(-1);          // y placeholder
                    c.sigma[t] = x;
                    c.sigma[y] = y;
                    c.vertex_of.push_back(g.vertex_of[t]);
                    c.vertex_of.push_back(c.n_vertices);
                    c.n_vertices += 1;
                    if (!c.side_edge.empty() || c.context == Context::Square)
                        c.side_edge.resize(c.dart_count() / 2, 0);
                    try_child(c, simple_flags ? base_after : -1, genus);
                }
                // chords within the face
                for (int j = i; j < deg; ++j) {
                    if (simple_flags) {
                        int d1 = (j - i) + 1;
                        int d2 = deg - (j - i) + 1;
                        int child_defects = base_after + (part_defect(d1) ? 1 : 0) + (part_defect(d2) ? 1 : 0);
                        int slack = (max_edges_ - g.edge_count() - 1) + target_genus - genus;
                        if (child_defects > slack) continue;
                        chord_child(cyc[i], cyc[j], child_defects, genus);
                    } else {
                        chord_child(cyc[i], cyc[j], -1, genus);
                    }
                }
            }
        }
        // handle edges (torus only, once)
        if (context_ == Context::Torus && genus == 0) {
            for (int f1 = 0; f1 < n_faces; ++f1)
                for (int f2 = f1 + 1; f2 < n_faces; ++f2) {
                    int def1 = 0, def2 = 0;
                    if (simple_flags && track_defects) {
                        auto face_def = [&](int ff) {
                            const int* cy = face_darts.data() + face_start[ff];
                            int dg = face_start[ff + 1] - face_start[ff];
                            return (dg == 1 && constraints_.no_monogons) ||
                                   (dg == 2 && constraints_.no_bigons && cy[0] / 2 != cy[1] / 2);
                        };
                        def1 = face_def(f1) ? 1 : 0;
                        def2 = face_def(f2) ? 1 : 0;
                    }
                    int child_defects = simple_flags ? parent_defects - def1 - def2 : -1;
                    for (int i1 = face_start[f1]; i1 < face_start[f1 + 1]; ++i1)
                        for (int i2 = face_start[f2]; i2 < face_start[f2 + 1]; ++i2)
                            chord_child(face_darts[i1], face_darts[i2], child_defects, genus + 1);
                }
        }
    }

    // boundary/zone classification by walking the marked faces directly
    void walk_marks(const EmbeddedGraph& g, std::vector<char>& bmask, std::vector<char>& skip) {
        bmask.assign(g.n_vertices, 0);
        skip.assign(g.n_vertices, 0);
        for (int od : {g.outer_dart, g.outer_dart2}) {
            if (od < 0) continue;
            int d = od;
            do {
                int t = EmbeddedGraph::twin(d);
                int v = g.vertex_of[t];
                bmask[v] = 1;
                if (context_ == Context::Square) {
                    int nxt = g.sigma[t];
                    bool cur_side = g.is_side(d / 2);
                    bool nxt_side = g.is_side(nxt / 2);
                    if (cur_side || nxt_side) skip[v] = 1;  // attachment points and corners
                }
                d = g.sigma[t];
            } while (d != od);
        }
    }

    bool valence_prune(const EmbeddedGraph& g) {
        if (constraints_.interior_valence_min == 0 && constraints_.boundary_valence_min == 0) return true;
        auto val = g.valences();
        std::vector<char> bmask, skip;
        walk_marks(g, bmask, skip);
        long long deficit = 0;
        std::vector<int> boundary_deficits;
        for (int v = 0; v < g.n_vertices; ++v) {
            if (skip[v]) continue;
            if (bmask[v]) {
                int d = constraints_.boundary_valence_min - val[v];
                if (d > 0) boundary_deficits.push_back(d);
            } else {
                int d = constraints_.interior_valence_min - val[v];
                if (d > 0) deficit += d;
            }
        }
        std::sort(boundary_deficits.rbegin(), boundary_deficits.rend());
        for (std::size_t i = constraints_.max_exceptions; i < boundary_deficits.size(); ++i)
            deficit += boundary_deficits[i];
        // each further edge supplies at most two valence units
        return deficit <= 2LL * (max_edges_ - g.edge_count());
    }
};

// Convenience wrapper matching the operation signature.
inline std::vector<EmbeddedGraph> enumerate_graphs(Context context, int max_edges, const Constraints& constraints,
                                                   long long* states = nullptr) {
    Enumerator en(context, max_edges, constraints);
    std::vector<EmbeddedGraph> out;
    en.run([&](const EmbeddedGraph& g) { out.push_back(g); });
    if (states) *states = en.states_visited();
    return out;
}

// ---------------------------------------------------------------------------
// Counterexample campaigns
// ---------------------------------------------------------------------------

enum class LemmaName { Sphere, Disk, Torus, Square, BigonBoundDisk, BigonBoundSquare };

inline const char* lemma_name(LemmaName l) {
    switch (l) {
        case LemmaName::Sphere: return "sphere";
        case LemmaName::Disk: return "disk";
        case LemmaName::Torus: return "torus";
        case LemmaName::Square: return "square";
        case LemmaName::BigonBoundDisk: return "bigon-bound";
        case LemmaName::BigonBoundSquare: return "bigon-bound-square";
    }
    return "?";
}

struct CampaignReport {
    std::string lemma;
    int max_edges = 0;
    int r_tw = 0;
    long long instances_checked = 0;
    long long holds = 0;
    long long vacuous = 0;
    long long states_visited = 0;
    long long counterexamples = 0;
    double runtime_seconds = 0;
};

inline CampaignReport search_counterexamples(LemmaName lemma, int max_edges, int r_tw = 0,
                                             const std::function<void(const EmbeddedGraph&)>& on_counterexample = {}) {
    auto t0 = std::chrono::steady_clock::now();
    CampaignReport rep;
    rep.lemma = lemma_name(lemma);
    rep.max_edges = max_edges;
    rep.r_tw = r_tw;

    Constraints c;
    Context ctx = Context::Sphere;
    switch (lemma) {
        case LemmaName::Sphere:
            ctx = Context::Sphere;
            c.no_monogons = c.no_bigons = true;
            break;
        case LemmaName::Disk:
            ctx = Context::Disk;
            c.no_monogons = c.no_bigons = true;
            break;
        case LemmaName::Torus:
            ctx = Context::Torus;
            c.no_monogons = c.no_bigons = true;
            break;
        case LemmaName::Square:
            ctx = Context::Square;
            c.no_monogons = c.no_bigons = true;
            break;
        case LemmaName::BigonBoundDisk:
            ctx = Context::Disk;
            c.no_monogons = true;
            c.interior_valence_min = r_tw;
            c.boundary_valence_min = r_tw / 2 + 1;
            c.max_exceptions = 2;
            break;
        case LemmaName::BigonBoundSquare:
            ctx = Context::Square;
            c.no_monogons = true;
            c.interior_valence_min = r_tw;
            c.boundary_valence_min = r_tw / 2 + 1;
            c.max_exceptions = 2;
            break;
    }
    if ((lemma == LemmaName::BigonBoundDisk || lemma == LemmaName::BigonBoundSquare) &&
        (r_tw < 2 || r_tw % 2 != 0))
        throw PreconditionError("bigon-bound campaigns need an even R_tw >= 2");

    Enumerator en(ctx, max_edges, c);
    std::atomic<long long> instances{0}, holds{0}, vacuous{0}, counterexamples{0};
    std::mutex cex_mu;
    en.run_parallel([&](const EmbeddedGraph& g0) {
        EmbeddedGraph g = g0;
        ++instances;
        LemmaVerdict v;
        switch (lemma) {
            case LemmaName::Sphere: v = check_sphere_lemma(g); break;
            case LemmaName::Disk: v = check_disk_lemma(g); break;
            case LemmaName::Torus: v = check_torus_lemma(g); break;
            case LemmaName::Square: v = check_square_lemma(g); break;
            case LemmaName::BigonBoundDisk:
            case LemmaName::BigonBoundSquare: {
                // exceptions are the boundary vertices below the schedule
                static thread_local graph_detail::LightAnalysis a;
                graph_detail::analyze_light(g, a);
                g.exceptional.clear();
                for (int vv = 0; vv < g.n_vertices; ++vv)
                    if (!a.zone_skip[vv] && a.bmask[vv] && 2 * a.valence[vv] < r_tw + 2) g.exceptional.push_back(vv);
                try {
                    v = check_bigon_bound(g, r_tw,
                                          lemma == LemmaName::BigonBoundDisk ? BigonBoundVariant::Disk
                                                                             : BigonBoundVariant::Square);
                } catch (const HypothesisViolated& hv) {
                    v.verdict = Verdict::Vacuous;
                    v.detail = hv.clause;
                }
                break;
            }
        }
        if (v.verdict == Verdict::Holds) ++holds;
        if (v.verdict == Verdict::Vacuous) ++vacuous;
        if (v.verdict == Verdict::Counterexample) {
            ++counterexamples;
            if (on_counterexample) {
                std::lock_guard<std::mutex> lock(cex_mu);
                on_counterexample(g);
            }
        }
    });
    rep.instances_checked = instances;
    rep.holds = holds;
    rep.vacuous = vacuous;
    rep.counterexamples = counterexamples;
    rep.states_visited = en.states_visited();
    rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace twistlink
