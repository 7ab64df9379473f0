#pragma once

#include <optional>
#include <vector>

#include "gridpaint/painting.hpp"
#include "gridpaint/solvability.hpp"

namespace gridpaint {

struct NotSolvable : std::runtime_error {
    NotSolvable() : std::runtime_error("grid does not admit a painting") {}
};
struct ResolutionTooLow : std::runtime_error {
    explicit ResolutionTooLow(const std::string& what) : std::runtime_error(what) {}
};

// Spanning tree of G_r (BFS from vertex 0, ties by edge id) and its
// crossing complement in G_b; the complement is asserted to span G_b.
struct CotreePair {
    std::vector<int> red_tree;   // red edge ids
    std::vector<int> blue_tree;  // blue edge ids
};

CotreePair cotree_pair(const AnalyzedGrid& ag);

enum class StripKind : uint8_t { Hug = 0, Corridor = 1, Chord = 2 };

// One planned monochrome connection through a purple region.
struct PlannedStrip {
    Color color = Color::Red;
    StripKind kind = StripKind::Chord;
    std::vector<BoundaryEdge> port_a, port_b;  // boundary attachment stretches
    std::vector<BoundaryEdge> arc;             // hug band geometry (gap edges)
    int occ_a = -1, occ_b = -1;                // colored-occurrence positions (chords)
    std::vector<int> span;                     // occurrence positions covered by the chord
};

struct RegionPlan {
    int purple_id = -1;
    std::vector<PlannedStrip> strips;
    std::vector<int> gadget_red_edges, gadget_blue_edges;  // chosen gadget edge ids
};

struct ConnectionPlan {
    std::vector<RegionPlan> regions;
    int r_min = 3;
};

// Translates the chosen trees into per-region strips: Step-1 hugs and hole
// corridors unconditionally, the tree-selected chord per kappa-4 region, and
// each gadget subtree's boundary-occurrence chain.
ConnectionPlan plan_connections(const AnalyzedGrid& ag, const CotreePair& trees);

// Routed strip paths, kept for tests and diagnostics.
struct RasterTrace {
    struct RoutedStrip {
        int purple_id;
        Color color;
        StripKind kind;
        std::vector<int> path;  // global subcell indices
    };
    std::vector<RoutedStrip> strips;
};

// Renders the plan at resolution R: commits every planned strip as a thin
// 4-connected path, gives every cell of every purple region both colors, and
// floods the rest. Throws ResolutionTooLow when some strip or presence stub
// cannot be routed at this resolution.
Painting rasterize(const ConnectionPlan& plan, const AnalyzedGrid& ag, int R,
                   RasterTrace* trace = nullptr);

struct PaintResult {
    Painting painting;
    ConnectionPlan plan;
    CotreePair trees;
    int attempts = 1;  // how many resolutions were tried
};

// Full synthesis driver: analyze, pick trees, plan, rasterize with
// retry-doubling on ResolutionTooLow. Throws NotSolvable on unsolvable grids.
PaintResult paint_grid(const ColoredGrid& grid, std::optional<int> resolution = std::nullopt);

}  // namespace gridpaint
