#pragma once

#include <array>
#include <string>
#include <vector>

#include "gridpaint/grid.hpp"

namespace gridpaint {

// A raster painting: every non-white cell is an R x R panel of subcells, each
// red or blue. Stored as one global subcell grid (height*R rows by width*R
// columns); white cells carry kNone.
struct Painting {
    static constexpr uint8_t kRed = 0;
    static constexpr uint8_t kBlue = 1;
    static constexpr uint8_t kNone = 2;

    int height = 0;
    int width = 0;
    int resolution = 0;
    std::vector<uint8_t> sub;

    int rows() const { return height * resolution; }
    int cols() const { return width * resolution; }
    uint8_t at(int gr, int gc) const { return sub[static_cast<size_t>(gr) * cols() + gc]; }
    uint8_t& at(int gr, int gc) { return sub[static_cast<size_t>(gr) * cols() + gc]; }
    bool in_bounds(int gr, int gc) const { return gr >= 0 && gr < rows() && gc >= 0 && gc < cols(); }

    static uint8_t value(Color c) { return c == Color::Red ? kRed : kBlue; }

    // subcell (i, j) within cell (r, c)
    uint8_t cell_at(int r, int c, int i, int j) const { return at(r * resolution + i, c * resolution + j); }
    uint8_t& cell_at(int r, int c, int i, int j) { return at(r * resolution + i, c * resolution + j); }

    static Painting blank(int height, int width, int resolution);
};

// Doubles the resolution; each subcell becomes a 2x2 block of its color.
Painting refine2(const Painting& p);

// Canonical painting JSON: {"cells":[...], "height":h, "resolution":R,
// "width":w}; cells row-major, each null (white) or an array of R strings of
// length R over "rb".
std::string painting_to_json(const Painting& p);
Painting painting_from_json(const std::string& text);

// (red pieces, blue pieces) inside one cell's panel, 4-adjacency within the
// cell raster only.
std::pair<int, int> panel_pieces(const Painting& p, int r, int c);

// Interval counts along the four sides of a panel (N, E, S, W): maximal
// monochrome runs of the outermost subcell layer.
std::array<int, 4> panel_side_intervals(const Painting& p, int r, int c);

}  // namespace gridpaint
