#pragma once

#include "twistlink/augment.hpp"

namespace twistlink {

// ---------------------------------------------------------------------------
// Euler-characteristic reports for checkerboard, punctured and twisted
// surfaces.  Surfaces are ledgers, not triangulations: every consumer of
// these reports needs chi, orientability, boundary counts and the per-circle
// attachment kinds only.
// ---------------------------------------------------------------------------

enum class SurfaceKind { Checkerboard, Punctured, Twisted, Subsurface };
enum class Attachment { Annulus, TwoMoebiusBands };

inline const char* surface_kind_name(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::Checkerboard: return "checkerboard";
        case SurfaceKind::Punctured: return "punctured";
        case SurfaceKind::Twisted: return "twisted";
        case SurfaceKind::Subsurface: return "subsurface";
    }
    return "?";
}

inline const char* attachment_name(Attachment a) {
    return a == Attachment::Annulus ? "annulus" : "two-moebius-bands";
}

struct AttachmentRecord {
    int circle = -1;
    int n_j = 0;
    Attachment kind = Attachment::Annulus;
};

struct SurfaceReport {
    SurfaceKind kind = SurfaceKind::Checkerboard;
    Color color = Color::Unset;
    long long chi = 0;
    bool orientable = true;
    int boundary_components = 0;
    bool embedded = true;
    std::vector<AttachmentRecord> ledger;
};

struct RegionMismatch : PreconditionError {
    RegionMismatch() : PreconditionError("twist region does not belong to this diagram") {}
};

// Disk-and-band presentation: one disk per face of the color, one half-twisted
// band per crossing, so chi = F_color - V.  Orientability is the bipartiteness
// of the face/band incidence graph, every band being a flip.  The surface
// boundary runs once along the whole link, so it has one component per link
// component.
inline SurfaceReport checkerboard_surface_report(const PlanarDiagram& d, const Coloring& col, Color color) {
    if (!d.connected()) throw PreconditionError("surface reports require a connected diagram");
    SurfaceReport rep;
    rep.kind = SurfaceKind::Checkerboard;
    rep.color = color;

    int f_color = 0;
    for (Color c : col.of_face)
        if (c == color) ++f_color;
    rep.chi = f_color - d.crossing_count();

    // band graph: vertices = faces of the color, one edge per crossing joining
    // its diagonal pair of that color
    std::vector<std::pair<int, int>> bands;
    for (int x = 0; x < d.crossing_count(); ++x) {
        int k = (col.of_face[d.corner_face(x, 0)] == color) ? 0 : 1;
        bands.push_back({d.corner_face(x, k), d.corner_face(x, k + 2)});
    }
    std::map<int, int> side;  // face -> orientation sign, propagated across bands
    bool orientable = true;
    std::vector<std::pair<int, int>> stack;
    for (const auto& b : bands)
        if (!side.count(b.first)) {
            stack.push_back({b.first, 0});
            while (!stack.empty()) {
                auto [f, s] = stack.back();
                stack.pop_back();
                auto it = side.find(f);
                if (it != side.end()) {
                    if (it->second != s) orientable = false;
                    continue;
                }
                side[f] = s;
                for (const auto& bb : bands) {
                    if (bb.first == f) stack.push_back({bb.second, s ^ 1});
                    if (bb.second == f) stack.push_back({bb.first, s ^ 1});
                }
            }
        }
    for (const auto& b : bands)
        if (b.first == b.second) orientable = false;  // band from a face to itself
    rep.orientable = orientable;
    rep.boundary_components = d.component_count();
    rep.embedded = true;
    return rep;
}

// B_i / R_i: the checkerboard surface of K_i punctured twice by each crossing
// circle meeting it.
inline SurfaceReport punctured_surface_report(const AugmentedDiagram& Li, Color color) {
    if (!stage_reduced(Li.stage)) throw PreconditionError("punctured_surface_report requires a reduced stage");
    SurfaceReport rep = checkerboard_surface_report(Li.base, Li.base_coloring, color);
    rep.kind = SurfaceKind::Punctured;
    int k = 0;
    for (const auto& cc : Li.circles)
        if (cc.punctured == color) ++k;
    rep.chi -= 2 * k;
    rep.boundary_components += 2 * k;
    return rep;
}

// S_{B,i} / S_{R,i}: the punctured surface with an annulus (n_j odd) or two
// Moebius bands (n_j even) attached along each pair of puncture circles.
// Attaching either contributes zero to chi; both puncture circles become
// interior gluing curves, so the boundary count returns to the checkerboard
// value.  The result is immersed, not embedded, as soon as a circle exists.
inline SurfaceReport twisted_surface_report(const AugmentedDiagram& Li, Color color) {
    SurfaceReport rep = punctured_surface_report(Li, color);
    rep.kind = SurfaceKind::Twisted;
    int k = 0;
    bool all_annuli = true;
    for (const auto& cc : Li.circles) {
        if (cc.punctured != color) continue;
        ++k;
        AttachmentRecord rec;
        rec.circle = cc.id;
        rec.n_j = cc.n_j;
        rec.kind = (cc.n_j % 2 == 1) ? Attachment::Annulus : Attachment::TwoMoebiusBands;
        if (rec.kind != Attachment::Annulus) all_annuli = false;
        rep.ledger.push_back(rec);
    }
    rep.boundary_components -= 2 * k;
    rep.embedded = (k == 0);
    if (k > 0) rep.orientable = rep.orientable && all_annuli;
    return rep;
}

// Euler characteristic of the subsurface of a checkerboard surface associated
// with a twist region: the side of the region's own bigon color is a disk, the
// other side has chi = 2 - c.
inline long long twist_region_subsurface(const PlanarDiagram& d, const Coloring& col, const TwistRegion& region,
                                         Color color) {
    TwistRegions tr = twist_regions(d, col);
    if (region.id < 0 || region.id >= static_cast<int>(tr.regions.size()) ||
        tr.regions[region.id].crossings != region.crossings)
        throw RegionMismatch();
    if (region.c == 1) return 1;  // both sides are disks
    return (color == region.bigon_color) ? 1 : 2 - region.c;
}

}  // namespace twistlink
