#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "gridpaint/grid.hpp"
#include "gridpaint/painting.hpp"

namespace gridpaint {

enum class OracleStatus { True, False, Timeout };

struct OracleOptions {
    int resolution = 3;
    double timeout_seconds = 0.0;  // 0 = no limit
    // pre-colored purple subcells: (cell row, cell col, sub i, sub j, color)
    std::vector<std::tuple<int, int, int, int, Color>> fixed;
    // pruning hooks for bounded-complexity searches (0 = unbounded)
    int max_pieces_per_panel = 0;
    bool forbid_two_by_two = false;  // reject panels with >= 2 pieces of both colors
};

struct OracleResult {
    OracleStatus status = OracleStatus::False;
    uint64_t nodes = 0;
    bool witness_valid = false;
    Painting witness;  // populated when status == True

    bool yes() const { return status == OracleStatus::True; }
    bool no() const { return status == OracleStatus::False; }
};

// Exhaustive backtracking over purple subcell colorings at a fixed
// resolution, with two-sided connectivity pruning: a same-color component
// sealed off from every unassigned compatible subcell fails as soon as any
// other area of its color exists or must still appear. Complete at the given
// resolution; independent of the dual-graph decision path.
OracleResult oracle_admits(const ColoredGrid& grid, const OracleOptions& opts = {});

}  // namespace gridpaint
