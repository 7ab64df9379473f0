#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridpaint {

// Piece colors. Cells may demand one, both, or neither.
enum class Color : uint8_t { Red = 0, Blue = 1 };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline char color_char(Color c) { return c == Color::Red ? 'r' : 'b'; }

// Per-cell color set: white = {}, purple = {red, blue}.
enum class CellKind : uint8_t { White = 0, Red = 1, Blue = 2, Purple = 3 };

inline bool cell_has(CellKind k, Color c) {
    if (k == CellKind::Purple) return true;
    if (k == CellKind::White) return false;
    return (k == CellKind::Red) == (c == Color::Red);
}

inline char cell_char(CellKind k) {
    switch (k) {
        case CellKind::White: return '.';
        case CellKind::Red: return 'R';
        case CellKind::Blue: return 'B';
        default: return 'P';
    }
}

struct FormatError : std::runtime_error {
    int row = -1;
    int col = -1;
    FormatError(const std::string& msg, int r = -1, int c = -1)
        : std::runtime_error(msg), row(r), col(c) {}
};

// Rectangular grid of color sets. Rows are indexed 0 (top) to height-1,
// columns 0 (left) to width-1.
struct ColoredGrid {
    int height = 0;
    int width = 0;
    std::vector<CellKind> cells;  // row-major

    CellKind at(int r, int c) const { return cells[static_cast<size_t>(r) * width + c]; }
    CellKind& at(int r, int c) { return cells[static_cast<size_t>(r) * width + c]; }
    bool in_bounds(int r, int c) const { return r >= 0 && r < height && c >= 0 && c < width; }

    bool fully_colored() const {
        for (CellKind k : cells)
            if (k == CellKind::White) return false;
        return true;
    }
    bool has_color(Color c) const {
        for (CellKind k : cells)
            if (cell_has(k, c)) return true;
        return false;
    }
    int count(CellKind k) const {
        int n = 0;
        for (CellKind x : cells) n += (x == k);
        return n;
    }
};

// Parses the text format: newline-separated rows over {R, B, P, ., W}.
// 'W' is accepted as an alias of '.'. Throws FormatError on ragged rows,
// illegal characters, or empty input.
ColoredGrid parse_grid(const std::string& text);

// Inverse of parse_grid (uses '.' for white, no trailing newline).
std::string to_text(const ColoredGrid& grid);

// 90-degree clockwise rotation.
ColoredGrid rotate90(const ColoredGrid& grid);

// Swaps red and blue cells; purple and white unchanged.
ColoredGrid swap_colors(const ColoredGrid& grid);

}  // namespace gridpaint
