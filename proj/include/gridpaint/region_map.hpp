#pragma once

#include <array>
#include <string>
#include <vector>

#include "gridpaint/grid.hpp"

namespace gridpaint {

struct NotPurple : std::runtime_error {
    explicit NotPurple(int id) : std::runtime_error("region " + std::to_string(id) + " is not purple") {}
};

// Maximal 4-connected set of cells with the same color assignment.
struct Region {
    int id = -1;
    CellKind colorset = CellKind::White;
    std::vector<std::pair<int, int>> cells;  // sorted row-major
};

// One unit of region boundary: the `side` edge of cell (row, col), where the
// neighbor across that side is outside the region. Sides 0..3 = N, E, S, W.
// Each side carries the traversal direction that keeps the region interior on
// the right: N->east, E->south, S->west, W->north.
struct BoundaryEdge {
    int row = 0;
    int col = 0;
    int side = 0;

    bool operator==(const BoundaryEdge&) const = default;
};

// A maximal run of boundary edges along one cycle where the same neighbor
// region (or a white/grid-boundary gap) lies across. Colored entries carry the
// neighbor region id; gaps keep their geometry for routing.
struct NeighborInterval {
    bool is_gap = true;
    int region_id = -1;         // neighbor region id when colored
    Color color = Color::Red;   // meaningful when colored
    std::vector<BoundaryEdge> edges;  // in traversal order
};

// Cyclic boundary description of one purple region: the clockwise outer cycle
// plus one cycle per hole (each also traversed with the interior on the right).
struct PurpleProfile {
    int region_id = -1;
    std::vector<NeighborInterval> boundary_cycle;
    std::vector<std::vector<NeighborInterval>> hole_cycles;
    std::vector<std::vector<std::pair<int, int>>> hole_cells;  // enclosed cells per hole
    int kappa = 0;  // colored intervals on the outer cycle

    int holes() const { return static_cast<int>(hole_cycles.size()); }
};

struct RegionMap {
    ColoredGrid grid;
    std::vector<Region> regions;
    std::vector<int> cell_to_region;          // -1 for white cells
    std::vector<PurpleProfile> purple_profiles;  // one per purple region, in region-id order

    int region_at(int r, int c) const { return cell_to_region[static_cast<size_t>(r) * grid.width + c]; }
    const PurpleProfile& profile_for(int region_id) const;
};

// Partitions the non-white cells into maximal 4-connected same-colorset
// regions. Ids are assigned in row-major order of each region's
// lexicographically smallest cell. Also builds all purple profiles.
RegionMap decompose_regions(const ColoredGrid& grid);

// Profile accessor used by the spec-level operation; throws NotPurple.
PurpleProfile boundary_cycle(const RegionMap& map, int purple_id);

// Number of holes of a purple region (bounded complementary components),
// with descriptors available on the profile. Throws NotPurple.
int count_holes(const RegionMap& map, int purple_id);

// Diagnostic JSON for --dump-regions (canonical: sorted keys, ints only).
std::string region_map_to_json(const RegionMap& map);

// Geometry helpers shared with synthesis / rasterization.
// Neighbor cell across a boundary edge; may be out of bounds.
inline std::pair<int, int> across(const BoundaryEdge& e) {
    static constexpr int dr[4] = {-1, 0, 1, 0};
    static constexpr int dc[4] = {0, 1, 0, -1};
    return {e.row + dr[e.side], e.col + dc[e.side]};
}

int count_colored(const std::vector<NeighborInterval>& cycle);

}  // namespace gridpaint
