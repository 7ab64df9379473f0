#pragma once

#include <string>
#include <vector>

#include "gridpaint/grid.hpp"
#include "gridpaint/painting.hpp"

namespace gridpaint {

struct Violation {
    std::string kind;  // missing-color | extra-color | color-disconnected | shape-mismatch
    int row = -1;
    int col = -1;
    std::string detail;
};

struct ValidationReport {
    bool ok = false;
    std::vector<Violation> violations;
};

// Independent ground truth for paintings: per-panel color compliance plus
// global per-color 4-connectivity at subcell granularity. Empty colors pass
// vacuously; corner-only contact does not connect.
ValidationReport validate_painting(const ColoredGrid& grid, const Painting& painting);

std::string report_to_json(const ValidationReport& report);

}  // namespace gridpaint
