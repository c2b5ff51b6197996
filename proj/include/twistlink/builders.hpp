#pragma once

#include "twistlink/diagram.hpp"

namespace twistlink {

// ---------------------------------------------------------------------------
// Programmatic diagram constructors.
//
// Diagrams are wired slot-by-slot; edge labels are assigned in wiring order.
// The wirings below alternate crossing orientation along a twist column so the
// result is alternating by construction; planarity and census expectations are
// pinned by the tests.
// ---------------------------------------------------------------------------

class WiringBuilder {
  public:
    explicit WiringBuilder(int crossings) : slots_(crossings, {0, 0, 0, 0}) {}

    void wire(int c1, int s1, int c2, int s2) {
        if (slots_[c1][s1] != 0 || slots_[c2][s2] != 0)
            throw PreconditionError("slot wired twice in builder");
        ++next_label_;
        slots_[c1][s1] = next_label_;
        slots_[c2][s2] = next_label_;
    }

    PlanarDiagram build() {
        for (const auto& s : slots_)
            for (int v : s)
                if (v == 0) throw PreconditionError("builder left an unwired slot");
        return PlanarDiagram(slots_);
    }

  private:
    std::vector<std::array<int, 4>> slots_;
    int next_label_ = 0;
};

namespace detail {

// A twist column c_first..c_last inside a builder.  Wiring j (between columns
// j and j+1) uses slots {2,3} of both when j is odd, slots {0,1} when even.
// Exposed legs afterwards:
//   bottom (first crossing): slots {0,1} with 0 = under, 1 = over
//   top (last crossing):     m even -> {0,1} (0 under, 1 over)
//                            m odd  -> {2,3} (2 under, 3 over)
struct ColumnLegs {
    int bottom_under, bottom_over, top_under, top_over;  // darts as (crossing, slot) packed below
    int bu_c, bu_s, bo_c, bo_s, tu_c, tu_s, to_c, to_s;
};

inline ColumnLegs wire_column(WiringBuilder& b, int first, int m) {
    for (int j = 1; j < m; ++j) {
        int x = first + j - 1, y = first + j;
        if (j % 2 == 1) {
            b.wire(x, 2, y, 3);
            b.wire(x, 3, y, 2);
        } else {
            b.wire(x, 0, y, 1);
            b.wire(x, 1, y, 0);
        }
    }
    ColumnLegs legs{};
    legs.bu_c = first, legs.bu_s = 0;
    legs.bo_c = first, legs.bo_s = 1;
    int last = first + m - 1;
    if (m % 2 == 0) {
        legs.tu_c = last, legs.tu_s = 0;
        legs.to_c = last, legs.to_s = 1;
    } else {
        legs.tu_c = last, legs.tu_s = 2;
        legs.to_c = last, legs.to_s = 3;
    }
    return legs;
}

// Second-column pattern used opposite a twist region: wiring j uses slots
// {1,2} of both when j odd, {0,3} when even.  Legs: first {0,3} (0 under,
// 3 over); last {0,3} if m even, {1,2} (2 under, 1 over) if odd.
struct ClaspLegs {
    int fu_c, fu_s, fo_c, fo_s, lu_c, lu_s, lo_c, lo_s;
};

inline ClaspLegs wire_clasp_column(WiringBuilder& b, int first, int m) {
    for (int j = 1; j < m; ++j) {
        int x = first + j - 1, y = first + j;
        if (j % 2 == 1) {
            b.wire(x, 2, y, 1);
            b.wire(x, 1, y, 2);
        } else {
            b.wire(x, 0, y, 3);
            b.wire(x, 3, y, 0);
        }
    }
    ClaspLegs legs{};
    legs.fu_c = first, legs.fu_s = 0;
    legs.fo_c = first, legs.fo_s = 3;
    int last = first + m - 1;
    if (m % 2 == 0) {
        legs.lu_c = last, legs.lu_s = 0;
        legs.lo_c = last, legs.lo_s = 3;
    } else {
        legs.lu_c = last, legs.lu_s = 2;
        legs.lo_c = last, legs.lo_s = 1;
    }
    return legs;
}

}  // namespace detail

// Double twist link J(a,b): a twist column of `a` crossings cross-connected to
// one of `b` crossings.  J(2,2) is the figure-8 knot, J(3,2) the 5_2 knot,
// J(m,2) the twist knots generally.  For a,b >= 2 the diagram has exactly two
// twist regions, of a and b crossings.
inline PlanarDiagram twist_column_link(int a, int b) {
    if (a < 1 || b < 1) throw PreconditionError("twist_column_link requires a,b >= 1");
    WiringBuilder w(a + b);
    auto A = detail::wire_column(w, 0, a);
    auto B = detail::wire_clasp_column(w, a, b);
    w.wire(A.bu_c, A.bu_s, B.fo_c, B.fo_s);  // bottom under <-> first over
    w.wire(A.bo_c, A.bo_s, B.lu_c, B.lu_s);  // bottom over  <-> last under
    w.wire(A.to_c, A.to_s, B.fu_c, B.fu_s);  // top over     <-> first under
    w.wire(A.tu_c, A.tu_s, B.lo_c, B.lo_s);  // top under    <-> last over
    return w.build();
}

// Alternating pretzel P(k_1,...,k_t): t twist columns side by side, tops
// chained left-to-right (cyclically), bottoms chained right-to-left.
inline PlanarDiagram pretzel(const std::vector<int>& k) {
    if (k.size() < 2) throw PreconditionError("pretzel requires at least two columns");
    int total = 0;
    for (int m : k) {
        if (m < 1) throw PreconditionError("pretzel column size must be >= 1");
        total += m;
    }
    WiringBuilder w(total);
    std::vector<detail::ColumnLegs> cols;
    int at = 0;
    for (int m : k) {
        cols.push_back(detail::wire_column(w, at, m));
        at += m;
    }
    const int t = static_cast<int>(k.size());
    for (int i = 0; i < t; ++i) {
        const auto& cur = cols[i];
        const auto& nxt = cols[(i + 1) % t];
        w.wire(cur.to_c, cur.to_s, nxt.tu_c, nxt.tu_s);  // tops: i over -> i+1 under
        w.wire(nxt.bo_c, nxt.bo_s, cur.bu_c, cur.bu_s);  // bottoms: i+1 over -> i under
    }
    return w.build();
}

// Reference PD codes.
inline PlanarDiagram trefoil() { return parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"); }
inline PlanarDiagram figure8() { return parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"); }
inline PlanarDiagram hopf() { return parse_pd("X[1,4,2,3] X[3,2,4,1]"); }
inline PlanarDiagram kink() { return parse_pd("X[1,2,2,1]"); }

// Connected sum along the least-labelled edges of two diagrams: both edges are
// cut and the four ends cross-joined so that alternation is preserved.
inline PlanarDiagram splice_sum(const PlanarDiagram& A, const PlanarDiagram& B) {
    const int va = A.crossing_count();
    std::vector<std::array<int, 4>> slots(va + B.crossing_count());
    const int shift = 2 * va;  // B's labels move past A's range
    for (int c = 0; c < va; ++c)
        for (int s = 0; s < 4; ++s) slots[c][s] = A.label_at(c, s);
    for (int c = 0; c < B.crossing_count(); ++c)
        for (int s = 0; s < 4; ++s) slots[va + c][s] = B.label_at(c, s) + shift;

    // Cut A's edge 1 and B's edge 1 (label shift+1).  Join under-end of one to
    // over-end of the other, using two fresh labels; then compact labels.
    auto [a1, a2] = A.edge_darts(1);
    auto [b1raw, b2raw] = B.edge_darts(1);
    int b1 = 4 * (va + b1raw / 4) + b1raw % 4;
    int b2 = 4 * (va + b2raw / 4) + b2raw % 4;
    bool a1_under = (a1 % 4) % 2 == 0;
    bool b1_under = (b1 % 4) % 2 == 0;
    int partner_of_a1 = (a1_under != b1_under) ? b1 : b2;
    int partner_of_a2 = (partner_of_a1 == b1) ? b2 : b1;
    int fresh1 = 2 * (va + B.crossing_count()) + 1, fresh2 = fresh1 + 1;
    slots[a1 / 4][a1 % 4] = fresh1;
    slots[partner_of_a1 / 4][partner_of_a1 % 4] = fresh1;
    slots[a2 / 4][a2 % 4] = fresh2;
    slots[partner_of_a2 / 4][partner_of_a2 % 4] = fresh2;

    // Compact labels to 1..2n preserving order.
    std::map<int, int> remap;
    for (const auto& s : slots)
        for (int v : s) remap[v] = 0;
    int next = 1;
    for (auto& [old_label, nl] : remap) (void)old_label, nl = next++;
    for (auto& s : slots)
        for (int& v : s) v = remap[v];
    return PlanarDiagram(slots);
}

}  // namespace twistlink
