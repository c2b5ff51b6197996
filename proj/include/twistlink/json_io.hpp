#pragma once

#include <json.hpp>

#include "twistlink/enumerate.hpp"
#include "twistlink/surface.hpp"

namespace twistlink {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Canonical JSON forms.  Key order is fixed and nothing time-dependent is
// emitted, so identical inputs serialize to identical bytes.
// ---------------------------------------------------------------------------

inline ordered_json diagram_to_json(const PlanarDiagram& d, const Coloring* col = nullptr) {
    ordered_json j;
    j["pd"] = serialize(d);
    ordered_json crossings = ordered_json::array();
    for (int c = 0; c < d.crossing_count(); ++c) {
        ordered_json jc;
        jc["slots"] = {d.label_at(c, 0), d.label_at(c, 1), d.label_at(c, 2), d.label_at(c, 3)};
        jc["over"] = {d.label_at(c, 1), d.label_at(c, 3)};  // over-passage labels
        crossings.push_back(jc);
    }
    j["crossings"] = crossings;
    ordered_json faces = ordered_json::array();
    for (const auto& f : d.faces()) {
        ordered_json jf;
        jf["id"] = f.id;
        jf["degree"] = f.degree;
        ordered_json corners = ordered_json::array();
        for (const auto& [cr, slot] : f.corners) corners.push_back({cr, slot});
        jf["corners"] = corners;
        faces.push_back(jf);
    }
    j["faces"] = faces;
    if (col) {
        ordered_json coloring = ordered_json::array();
        for (Color c : col->of_face) coloring.push_back(color_name(c));
        j["coloring"] = coloring;
    }
    j["components"] = d.component_count();
    return j;
}

inline ordered_json validation_to_json(const ValidationReport& r) {
    ordered_json j = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        j.push_back(jc);
    }
    return j;
}

inline ordered_json witness_to_json(const CurveWitness& w) {
    ordered_json j;
    j["kind"] = (w.kind == CurveWitness::Kind::PrimeViolation) ? "prime-violation" : "twist-reduced-violation";
    j["through"] = {w.through[0], w.through[1]};
    j["faces"] = {w.faces[0], w.faces[1]};
    j["sides"] = {w.sides[0], w.sides[1]};
    return j;
}

// Twist-analysis report (twist fields omitted when the diagram is not
// alternating).
inline ordered_json twist_report_to_json(const PlanarDiagram& d) {
    ordered_json j;
    ValidationReport vr = validate(d);
    j["validation"] = validation_to_json(vr);
    if (!vr.all_pass()) {
        // twist fields are omitted for invalid or non-alternating diagrams
        j["alternating"] = d.crossing_count() > 0 && d.is_alternating();
        return j;
    }
    Coloring col = checkerboard(d);
    TwistRegions tr = twist_regions(d, col);
    ordered_json regions = ordered_json::array();
    for (const auto& r : tr.regions) {
        ordered_json jr;
        jr["crossings"] = r.crossings;
        jr["c"] = r.c;
        jr["color"] = color_name(r.bigon_color);
        jr["closed"] = r.closed;
        jr["sign"] = r.sign;
        regions.push_back(jr);
    }
    j["twist_regions"] = regions;
    ordered_json witnesses = ordered_json::array();
    auto pw = is_prime_witness(d);
    j["prime"] = !pw.has_value();
    if (pw) witnesses.push_back(witness_to_json(*pw));
    bool reduced = false, blue_reduced = false;
    if (!pw) {
        auto tw = twist_reduced_witness(d, col);
        reduced = !tw.has_value();
        if (tw) witnesses.push_back(witness_to_json(*tw));
        auto bw = twist_reduced_witness(d, col, Color::Blue);
        blue_reduced = !bw.has_value();
    }
    j["twist_reduced"] = reduced;
    j["blue_twist_reduced"] = blue_reduced;
    if (!pw && reduced)
        j["twist_number"] = static_cast<int>(tr.regions.size());
    else
        j["twist_number"] = nullptr;
    j["witnesses"] = witnesses;
    return j;
}

inline ordered_json circle_to_json(const CrossingCircle& cc) {
    ordered_json j;
    j["id"] = cc.id;
    j["region"] = cc.region;
    j["c"] = cc.original_c;
    j["r"] = cc.r;
    j["n_j"] = cc.n_j;
    j["sign"] = cc.sign;
    j["associated"] = cc.associated;
    j["color"] = color_name(cc.punctured);
    ordered_json flags = ordered_json::array();
    if (cc.triangle_flag) flags.push_back("triangle-with-crossing");
    if (cc.bigon_thread_flag) flags.push_back("bigon-threading");
    if (cc.closed_region) flags.push_back("closed-chain");
    j["flags"] = flags;
    if (!cc.site_edges.empty()) j["site_edges"] = cc.site_edges;
    return j;
}

inline ordered_json augmented_to_json(const AugmentedDiagram& a) {
    ordered_json j;
    j["stage"] = stage_name(a.stage);
    if (stage_reduced(a.stage)) j["i"] = a.i;
    j["n_tw"] = a.n_tw;
    j["base"] = diagram_to_json(a.base, &a.base_coloring);
    ordered_json circles = ordered_json::array();
    for (const auto& cc : a.circles) circles.push_back(circle_to_json(cc));
    j["circles"] = circles;
    ordered_json prov;
    for (std::size_t c = 0; c < a.provenance.size(); ++c) prov[std::to_string(c)] = a.provenance[c];
    j["provenance"] = prov;
    return j;
}

inline ordered_json surface_report_to_json(const SurfaceReport& s) {
    ordered_json j;
    j["kind"] = surface_kind_name(s.kind);
    j["color"] = color_name(s.color);
    j["chi"] = s.chi;
    j["orientable"] = s.orientable;
    j["boundary_components"] = s.boundary_components;
    j["embedded"] = s.embedded;
    ordered_json ledger = ordered_json::array();
    for (const auto& rec : s.ledger) {
        ordered_json jr;
        jr["circle"] = rec.circle;
        jr["n_j"] = rec.n_j;
        jr["attachment"] = attachment_name(rec.kind);
        ledger.push_back(jr);
    }
    j["ledger"] = ledger;
    return j;
}

inline ordered_json structure_report_to_json(const StructureReport& r) {
    ordered_json j = ordered_json::array();
    for (const auto& it : r.items) {
        ordered_json ji;
        ji["name"] = it.name;
        ji["pass"] = it.pass;
        if (!it.witness.empty()) ji["witness"] = it.witness;
        j.push_back(ji);
    }
    return j;
}

inline ordered_json graph_to_json(const EmbeddedGraph& g) {
    ordered_json j;
    ordered_json vertices = ordered_json::array();
    std::vector<std::vector<int>> rot(g.n_vertices);
    std::vector<char> seen(g.dart_count(), 0);
    for (int d = 0; d < g.dart_count(); ++d) {
        if (seen[d]) continue;
        int cur = d;
        do {
            seen[cur] = 1;
            rot[g.vertex_of[cur]].push_back(cur);
            cur = g.sigma[cur];
        } while (cur != d);
    }
    for (int v = 0; v < g.n_vertices; ++v) {
        ordered_json jv;
        jv["rot"] = rot[v];
        vertices.push_back(jv);
    }
    j["vertices"] = vertices;
    ordered_json pairing = ordered_json::array();
    for (int e = 0; e < g.edge_count(); ++e) pairing.push_back({2 * e, 2 * e + 1});
    j["pairing"] = pairing;
    j["context"] = context_name(g.context);
    ordered_json boundary;
    if (g.outer_dart >= 0) boundary["outer_dart"] = g.outer_dart;
    if (g.outer_dart2 >= 0) boundary["outer_dart2"] = g.outer_dart2;
    j["boundary"] = boundary;
    ordered_json marks;
    ordered_json sides = ordered_json::array();
    for (int e = 0; e < static_cast<int>(g.side_edge.size()); ++e)
        if (g.side_edge[e]) sides.push_back(e);
    marks["side_edges"] = sides;
    marks["exceptional"] = g.exceptional;
    j["marks"] = marks;
    j["cellular"] = g.cellular;
    return j;
}

inline ordered_json campaign_to_json(const CampaignReport& r) {
    ordered_json j;
    j["lemma"] = r.lemma;
    j["max_edges"] = r.max_edges;
    if (r.r_tw > 0) j["r_tw"] = r.r_tw;
    j["instances_checked"] = r.instances_checked;
    j["holds"] = r.holds;
    j["vacuous"] = r.vacuous;
    j["states_visited"] = r.states_visited;
    j["counterexamples"] = r.counterexamples;
    return j;
}

// ---------------------------------------------------------------------------
// DOT exports
// ---------------------------------------------------------------------------

// face-adjacency graph: one node per face, one edge per diagram edge
inline std::string diagram_to_dot(const PlanarDiagram& d, const Coloring* col = nullptr) {
    std::ostringstream os;
    os << "graph faces {\n";
    for (const auto& f : d.faces()) {
        os << "  f" << f.id << " [label=\"f" << f.id << " deg " << f.degree << "\"";
        if (col) {
            Color c = col->of_face[f.id];
            if (c != Color::Unset)
                os << ", style=filled, fillcolor=" << (c == Color::Blue ? "lightblue" : "lightcoral");
        }
        os << "];\n";
    }
    for (const auto& [label, dd] : d.edges())
        os << "  f" << d.face_of_dart(dd.first) << " -- f" << d.face_of_dart(dd.second) << " [label=\"e" << label
           << "\"];\n";
    os << "}\n";
    return os.str();
}

inline std::string graph_to_dot(const EmbeddedGraph& g) {
    std::ostringstream os;
    os << "graph embedded {\n";
    for (int v = 0; v < g.n_vertices; ++v) os << "  v" << v << ";\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        os << "  v" << g.vertex_of[2 * e] << " -- v" << g.vertex_of[2 * e + 1] << " [label=\"" << e << "\"";
        if (g.is_side(e)) os << ", style=dashed";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace twistlink
