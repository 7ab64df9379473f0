#pragma once

#include <map>
#include <string>
#include <vector>

#include "gridpaint/region_map.hpp"

namespace gridpaint {

struct NonAlternating : std::runtime_error {
    explicit NonAlternating(int id)
        : std::runtime_error("profile of region " + std::to_string(id) + " does not alternate") {}
};
struct InvalidK : std::runtime_error {
    explicit InvalidK(int k) : std::runtime_error("spiderweb k must be >= 3, got " + std::to_string(k)) {}
};

// One occurrence of a (possibly merged) neighbor region, or a gap, on a
// reduced boundary cycle. `contact` holds the real colored boundary edges
// (attachment ports); `span` additionally includes gap stretches absorbed by
// merging, in cycle order.
struct CycleEntry {
    bool is_gap = true;
    Color color = Color::Red;
    int region_id = -1;  // an original region id; the merged class is find(region_id)
    std::vector<BoundaryEdge> contact;
    std::vector<BoundaryEdge> span;
};

// A Step-1 connection: two same-color intervals joined along the purple
// region's boundary, hugging the (possibly empty) gap arc between them.
struct BoundaryConnection {
    int purple_id = -1;
    Color color = Color::Red;
    std::vector<BoundaryEdge> port_a;
    std::vector<BoundaryEdge> port_b;
    std::vector<BoundaryEdge> arc;  // gap edges between the ports; empty for corner meets
};

// Cross-annulus corridors installed when cutting one hole open.
struct HoleCut {
    int purple_id = -1;
    int hole_index = 0;
    struct Corridor {
        Color color;
        std::vector<BoundaryEdge> inner;  // contact edges on the hole cycle
        std::vector<BoundaryEdge> outer;  // contact edges on the (current) outer cycle
    };
    std::vector<Corridor> corridors;  // at most one per color
};

// Final hole-free alternating cycle of one purple region.
struct MergedProfile {
    int purple_id = -1;
    std::vector<CycleEntry> cycle;

    std::vector<int> colored_positions() const;  // indices of colored entries
};

// ── Spiderweb gadget ─────────────────────────────────────────────────

// Leveled self-dual gadget for purple regions with kappa = 2k > 4.
// Levels 0..L (L = floor(k/2)+1): level 0 holds k isolated blue vertices,
// levels 1..L-1 are k-cycles of alternating color (odd red, even blue), and
// level L is a single vertex joined to every vertex of level L-2.
struct SpiderwebGadget {
    int k = 0;
    int innermost_level = 0;  // L

    struct Vertex {
        int level;
        int label;  // 0..2k-1; -1 for the innermost single vertex
        Color color;
    };
    struct Edge {
        Color color;
        int u, v;   // vertex ids
        int kind;   // 0 = level-cycle edge, 1 = spoke, 2 = innermost spoke
        int level;  // hosting level (cycle edges) / upper level (spokes)
        int label;  // cycle edges: lower endpoint label; spokes: spoke label
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<std::pair<int, int>> crossings;  // (red edge idx, blue edge idx)

    int vertex_id(int level, int label) const;
    int innermost_vertex() const;
    int level_of(int vid) const { return vertices[vid].level; }
    int label_of(int vid) const { return vertices[vid].label; }
    Color color_of(int vid) const { return vertices[vid].color; }
    std::vector<int> red_edge_ids() const;
    std::vector<int> blue_edge_ids() const;
};

SpiderwebGadget build_spiderweb(int k);

struct BadEndpoints : std::runtime_error {
    explicit BadEndpoints(const std::string& m) : std::runtime_error(m) {}
};

// Canonical monotone path between two same-color vertices on the outermost
// level of that color: spoke up, shortest arc within the prescribed level
// (clockwise on ties), spoke down. Returns vertex ids in order.
std::vector<int> bridging_path(const SpiderwebGadget& g, int u, int v);

// ── Dual pair ────────────────────────────────────────────────────────

enum class EdgeKind : uint8_t { K4Chord = 0, GadgetCycle = 1, GadgetSpoke = 2, GadgetInnermost = 3 };

struct DualEdge {
    Color color;
    int u = -1, v = -1;   // vertex ids within this color's graph
    int purple_id = -1;   // hosting purple region
    int cross = -1;       // index of the crossing edge in the other color's list
    EdgeKind kind = EdgeKind::K4Chord;
    int occ_u = -1, occ_v = -1;  // colored-occurrence positions on the region cycle; -1 internal
    int gadget_edge = -1;        // index into the region's gadget edge list
};

// The two embedded multigraphs G_r and G_b with their crossing bijection.
// Vertices 0..n-1 per color: merged region classes first (ordered by smallest
// original region id), then internal vertices (gadget internals and the
// isolated vertices of enclosed colors).
struct DualPair {
    int n_r = 0, n_b = 0;
    int n_r_regions = 0, n_b_regions = 0;  // how many of the vertices are region classes
    std::vector<DualEdge> red_edges, blue_edges;
    std::vector<int> red_class_region, blue_class_region;  // class vertex -> smallest region id
    std::vector<int> red_internal_purple, blue_internal_purple;  // internal vertex -> purple region

    int e() const { return static_cast<int>(red_edges.size()); }
};

struct Verdict {
    bool solvable = false;
    int n_r = 0, n_b = 0, e = 0;
    bool red_connected = true, blue_connected = true;
};

// Gadget instance attached to one purple region: gadget topology plus the
// mapping between boundary labels and cycle occurrence positions.
struct GadgetInstance {
    SpiderwebGadget gadget;
    std::vector<int> label_to_occ;    // label 0..2k-1 -> colored-occurrence position
    std::vector<int> vertex_to_dual;  // gadget vertex id -> dual vertex id (within its color)
};

// Full front-pipeline state: region decomposition, Step-1 merges, hole cuts,
// reduced profiles, and the dual pair with its verdict.
struct AnalyzedGrid {
    RegionMap map;
    std::vector<int> region_class;  // region id -> representative region id
    std::vector<MergedProfile> profiles;
    std::vector<BoundaryConnection> connections;
    std::vector<HoleCut> cuts;
    std::map<int, GadgetInstance> gadgets;  // purple region id -> instance
    DualPair pair;
    Verdict verdict;

    int find_class(int region_id) const;
    const MergedProfile& profile_of(int purple_id) const;
};

AnalyzedGrid analyze(const ColoredGrid& grid);

// Theorem-1 decision: G_r and G_b both connected and e = n_r + n_b - 2,
// with empty colors vacuously connected.
Verdict admits_painting(const ColoredGrid& grid);

// ── Spec-level standalone stages (shared core with analyze) ─────────

struct MergeResult {
    std::vector<CycleEntry> outer;
    std::vector<std::vector<CycleEntry>> holes;
    std::vector<BoundaryConnection> connections;
};

// Step 1 for a single profile: repeatedly joins consecutive same-color
// intervals (gaps ignored) on the outer and each hole cycle independently.
MergeResult merge_consecutive_same_color(const RegionMap& map, const PurpleProfile& prof);

struct HoleReductionResult {
    std::vector<MergedProfile> profiles;  // one per purple region, hole-free
    std::vector<HoleCut> cuts;
    std::vector<BoundaryConnection> connections;  // Step-1 merges incl. splice-time ones
    std::vector<int> region_class;
};

// Steps 1+2 for the whole grid.
HoleReductionResult reduce_holes(const RegionMap& map);

// JSON dump of the dual pair for --dump-graphs.
std::string dual_pair_to_json(const AnalyzedGrid& ag);

}  // namespace gridpaint
