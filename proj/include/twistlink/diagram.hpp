#pragma once

#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "twistlink/combinatorial_map.hpp"

namespace twistlink {

// ---------------------------------------------------------------------------
// Link diagrams as 4-valent combinatorial maps.
//
// PD convention, fixed bit-exactly for this library:
//   * a crossing is a token X[a,b,c,d] whose labels are read counterclockwise,
//   * slot 0 carries the incoming understrand, so slots 0 and 2 are the
//     under-passages and slots 1 and 3 the over-passages,
//   * edge labels 1..2n each appear exactly twice over the whole diagram.
//
// Dart d = 4*crossing + slot.  The face orbit of a dart lies to its right
// (dart pointing away from its crossing); the face of alpha[d] lies to its left.
// ---------------------------------------------------------------------------

enum class Color : int { Unset = -1, Blue = 0, Red = 1 };

inline Color opposite(Color c) {
    if (c == Color::Blue) return Color::Red;
    if (c == Color::Red) return Color::Blue;
    return Color::Unset;
}

inline const char* color_name(Color c) {
    switch (c) {
        case Color::Blue: return "blue";
        case Color::Red: return "red";
        default: return "unset";
    }
}

struct Face {
    int id = -1;
    std::vector<int> darts;                       // face walk, each dart once
    std::vector<std::pair<int, int>> corners;     // (crossing, slot-interval k) = corner between slots k,k+1
    int degree = 0;
    bool is_bigon() const { return degree == 2; }
    bool is_monogon() const { return degree == 1; }
};

struct Coloring {
    std::vector<Color> of_face;  // face id -> color
    Color operator[](int f) const { return of_face.at(f); }
};

class PlanarDiagram {
  public:
    PlanarDiagram() = default;

    // Build from per-crossing slot labels; validates pairing and connectivity.
    explicit PlanarDiagram(std::vector<std::array<int, 4>> slot_labels) : slots_(std::move(slot_labels)) {
        build();
    }

    int crossing_count() const { return static_cast<int>(slots_.size()); }
    int edge_count() const { return crossing_count() * 2; }
    const std::vector<std::array<int, 4>>& slots() const { return slots_; }
    int label_at(int crossing, int slot) const { return slots_[crossing][slot & 3]; }

    int dart(int crossing, int slot) const { return 4 * crossing + (slot & 3); }
    int crossing_of(int d) const { return d / 4; }
    int slot_of(int d) const { return d % 4; }
    int alpha(int d) const { return map_.alpha[d]; }
    int sigma(int d) const { return map_.sigma[d]; }
    const CombMap& comb_map() const { return map_; }

    int label_of_dart(int d) const { return slots_[d / 4][d % 4]; }
    // The two darts carrying a label; first is the lexicographically smaller dart.
    std::pair<int, int> edge_darts(int label) const { return edge_darts_.at(label); }
    int max_label() const { return static_cast<int>(edge_darts_.size()) ? edge_darts_.rbegin()->first : 0; }
    const std::map<int, std::pair<int, int>>& edges() const { return edge_darts_; }

    const std::vector<Face>& faces() const { return faces_; }
    int face_of_dart(int d) const { return face_of_dart_[d]; }
    // Face occupying the corner of `crossing` between slots k and k+1.
    int corner_face(int crossing, int k) const { return face_of_dart_[dart(crossing, k + 1)]; }

    int component_of_edge(int label) const { return component_of_edge_.at(label); }
    int component_count() const { return component_count_; }

    bool connected() const { return connected_; }
    int genus() const { return genus_; }

    // True iff every edge joins an under-passage (slot 0 or 2) to an over-passage.
    bool is_alternating() const {
        for (const auto& [label, dd] : edge_darts_) {
            (void)label;
            bool u1 = (dd.first % 4) % 2 == 0;
            bool u2 = (dd.second % 4) % 2 == 0;
            if (u1 == u2) return false;
        }
        return true;
    }

    bool empty() const { return slots_.empty(); }

  private:
    std::vector<std::array<int, 4>> slots_;
    CombMap map_;
    std::map<int, std::pair<int, int>> edge_darts_;
    std::vector<Face> faces_;
    std::vector<int> face_of_dart_;
    std::map<int, int> component_of_edge_;
    int component_count_ = 0;
    bool connected_ = true;
    int genus_ = 0;

    void build() {
        const int V = crossing_count();
        const int n = 4 * V;

        // Pairing by label.  Labels must be 1..2n, each exactly twice.
        std::map<int, std::vector<int>> where;
        for (int d = 0; d < n; ++d) where[label_of_dart(d)].push_back(d);
        if (V > 0) {
            if (static_cast<int>(where.size()) != 2 * V)
                throw ParseError("expected " + std::to_string(2 * V) + " distinct edge labels, found " +
                                 std::to_string(where.size()));
            int expect = 1;
            for (const auto& [label, ds] : where) {
                if (label != expect)
                    throw ParseError("edge labels must be 1..2n; missing label " + std::to_string(expect));
                if (ds.size() != 2)
                    throw ParseError("label " + std::to_string(label) + " appears " + std::to_string(ds.size()) +
                                     " times (expected 2)");
                ++expect;
            }
        }

        map_.alpha.assign(n, -1);
        map_.sigma.assign(n, -1);
        map_.vertex_of.assign(n, -1);
        map_.vertex_count = V;
        for (const auto& [label, ds] : where) {
            (void)label;
            map_.alpha[ds[0]] = ds[1];
            map_.alpha[ds[1]] = ds[0];
            edge_darts_[label_of_dart(ds[0])] = {ds[0], ds[1]};
        }
        for (int c = 0; c < V; ++c)
            for (int s = 0; s < 4; ++s) {
                map_.sigma[4 * c + s] = 4 * c + ((s + 1) & 3);
                map_.vertex_of[4 * c + s] = c;
            }
        if (V > 0) {
            map_.check_valid();
            connected_ = map_connected(map_);
            if (!connected_) throw ParseError("diagram is disconnected");
        }

        // Faces.
        FaceSet fs = face_walk(map_);
        face_of_dart_ = fs.face_of;
        faces_.clear();
        for (int f = 0; f < static_cast<int>(fs.cycles.size()); ++f) {
            Face face;
            face.id = f;
            face.darts = fs.cycles[f];
            face.degree = static_cast<int>(face.darts.size());
            for (int d : face.darts) {
                // The walk step leaving d passes the corner of crossing(alpha[d])
                // between slot(alpha[d]) and slot(alpha[d])+1.
                int a = map_.alpha[d];
                face.corners.emplace_back(a / 4, a % 4);
            }
            faces_.push_back(std::move(face));
        }
        genus_ = V > 0 ? map_genus(map_, fs) : 0;

        // Link components: edges joined by passing straight through (slot s -> s+2).
        component_of_edge_.clear();
        component_count_ = 0;
        std::map<int, int> comp;
        for (const auto& [label, dd] : edge_darts_) (void)dd, comp[label] = -1;
        for (auto& [label, c] : comp) {
            if (c != -1) continue;
            int id = component_count_++;
            std::vector<int> stack{label};
            c = id;
            while (!stack.empty()) {
                int lab = stack.back();
                stack.pop_back();
                auto [d1, d2] = edge_darts_[lab];
                for (int d : {d1, d2}) {
                    int through = 4 * (d / 4) + ((d % 4 + 2) & 3);
                    int nl = label_of_dart(through);
                    if (comp[nl] == -1) {
                        comp[nl] = id;
                        stack.push_back(nl);
                    }
                }
            }
        }
        component_of_edge_ = comp;
    }
};

// ---------------------------------------------------------------------------
// parse_pd / serialize
// ---------------------------------------------------------------------------

inline PlanarDiagram parse_pd(const std::string& text) {
    std::string s = text;
    // Accept an optional PD[...] wrapper.
    auto first_non_space = s.find_first_not_of(" \t\r\n");
    if (first_non_space != std::string::npos && s.compare(first_non_space, 3, "PD[") == 0) {
        auto close = s.rfind(']');
        if (close == std::string::npos || close <= first_non_space + 2) throw ParseError("unterminated PD[...] wrapper");
        s = s.substr(first_non_space + 3, close - first_non_space - 3);
    }
    std::vector<std::array<int, 4>> slots;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto skip_sep = [&] {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
    };
    skip_sep();
    while (i < s.size()) {
        if (s[i] != 'X') throw ParseError("expected X[a,b,c,d] token at position " + std::to_string(i));
        ++i;
        if (i >= s.size() || s[i] != '[') throw ParseError("malformed token: missing '['");
        ++i;
        std::array<int, 4> labels{};
        for (int k = 0; k < 4; ++k) {
            skip_ws();
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw ParseError("malformed token: expected integer label");
            labels[k] = std::stoi(s.substr(i, j - i));
            if (labels[k] <= 0) throw ParseError("edge labels must be positive");
            i = j;
            skip_ws();
            if (k < 3) {
                if (i >= s.size() || s[i] != ',') throw ParseError("malformed token: expected ','");
                ++i;
            }
        }
        if (i >= s.size() || s[i] != ']') throw ParseError("malformed token: missing ']'");
        ++i;
        slots.push_back(labels);
        skip_sep();
    }
    return PlanarDiagram(std::move(slots));
}

inline std::string serialize(const PlanarDiagram& d) {
    std::ostringstream os;
    for (int c = 0; c < d.crossing_count(); ++c) {
        if (c) os << ' ';
        os << "X[" << d.label_at(c, 0) << ',' << d.label_at(c, 1) << ',' << d.label_at(c, 2) << ','
           << d.label_at(c, 3) << ']';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// checkerboard coloring
// ---------------------------------------------------------------------------

// Proper 2-coloring of faces across edges.  Normalization: among the darts at
// slot 0 (the under-in passages), take the one with the least edge label; the
// face on the left of that edge, traversed from its under-in endpoint outward,
// is blue.  If the diagram has no crossings the coloring is empty.
inline Coloring checkerboard(const PlanarDiagram& d) {
    Coloring col;
    col.of_face.assign(d.faces().size(), Color::Unset);
    if (d.crossing_count() == 0) return col;
    if (!d.connected()) throw PreconditionError("checkerboard requires a connected diagram");

    // BFS 2-coloring; conflicts cannot occur on a genus-0 diagram.
    std::vector<int> parity(d.faces().size(), -1);
    std::vector<int> stack{0};
    parity[0] = 0;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int dart : d.faces()[f].darts) {
            int g = d.face_of_dart(d.alpha(dart));
            if (parity[g] == -1) {
                parity[g] = parity[f] ^ 1;
                stack.push_back(g);
            } else if (parity[g] == parity[f]) {
                throw PreconditionError("face adjacency is not bipartite (diagram not planar?)");
            }
        }
    }

    int best_dart = -1;
    for (int c = 0; c < d.crossing_count(); ++c) {
        int dd = d.dart(c, 0);
        if (best_dart == -1 || d.label_of_dart(dd) < d.label_of_dart(best_dart)) best_dart = dd;
    }
    int blue_face = d.face_of_dart(d.alpha(best_dart));  // face on the left of the under-in edge
    int blue_parity = parity[blue_face];
    for (std::size_t f = 0; f < parity.size(); ++f)
        col.of_face[f] = (parity[f] == blue_parity) ? Color::Blue : Color::Red;
    return col;
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const ValidationCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

// Structural report: 4-valence and pairing hold by construction, so they are
// reported as outcomes of re-checking the stored arrays.
inline ValidationReport validate(const PlanarDiagram& d) {
    ValidationReport r;
    if (d.crossing_count() == 0) {
        r.checks.push_back({"nonempty", false, "no crossings"});
        return r;
    }
    r.checks.push_back({"nonempty", true, std::to_string(d.crossing_count()) + " crossings"});

    bool pairing = true;
    for (const auto& [label, dd] : d.edges())
        if (d.label_of_dart(dd.first) != label || d.label_of_dart(dd.second) != label) pairing = false;
    r.checks.push_back({"pairing", pairing, "every label on exactly two slots"});
    r.checks.push_back({"four_valent", true, "all crossings have 4 slots"});
    r.checks.push_back({"connected", d.connected(), ""});

    int V = d.crossing_count(), E = d.edge_count(), F = static_cast<int>(d.faces().size());
    bool euler = (V - E + F == 2);
    r.checks.push_back({"genus_zero", euler,
                        "V-E+F = " + std::to_string(V - E + F) + " (genus " + std::to_string(d.genus()) + ")"});

    long long degsum = 0;
    for (const auto& f : d.faces()) degsum += f.degree;
    r.checks.push_back({"degree_sum", degsum == 2LL * E, "sum of face degrees = 2E"});
    r.checks.push_back({"alternating", d.is_alternating(), ""});
    return r;
}

}  // namespace twistlink
