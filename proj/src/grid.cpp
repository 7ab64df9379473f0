#include "gridpaint/grid.hpp"

namespace gridpaint {

ColoredGrid parse_grid(const std::string& text) {
    std::vector<std::string> rows;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            rows.push_back(cur);
            cur.clear();
        } else if (ch == '\r') {
            // tolerate CRLF
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) rows.push_back(cur);
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    if (rows.empty()) throw FormatError("empty grid input");

    ColoredGrid g;
    g.height = static_cast<int>(rows.size());
    g.width = static_cast<int>(rows[0].size());
    if (g.width == 0) throw FormatError("empty grid row", 0);
    g.cells.resize(static_cast<size_t>(g.height) * g.width);

    for (int r = 0; r < g.height; ++r) {
        if (static_cast<int>(rows[r].size()) != g.width)
            throw FormatError("ragged row " + std::to_string(r), r);
        for (int c = 0; c < g.width; ++c) {
            switch (rows[r][c]) {
                case 'R': g.at(r, c) = CellKind::Red; break;
                case 'B': g.at(r, c) = CellKind::Blue; break;
                case 'P': g.at(r, c) = CellKind::Purple; break;
                case '.':
                case 'W': g.at(r, c) = CellKind::White; break;
                default:
                    throw FormatError("illegal character '" + std::string(1, rows[r][c]) +
                                          "' at (" + std::to_string(r) + "," + std::to_string(c) + ")",
                                      r, c);
            }
        }
    }
    return g;
}

std::string to_text(const ColoredGrid& grid) {
    std::string out;
    for (int r = 0; r < grid.height; ++r) {
        if (r) out += '\n';
        for (int c = 0; c < grid.width; ++c) out += cell_char(grid.at(r, c));
    }
    return out;
}

ColoredGrid rotate90(const ColoredGrid& grid) {
    ColoredGrid g;
    g.height = grid.width;
    g.width = grid.height;
    g.cells.resize(grid.cells.size());
    // (r, c) -> (c, height-1-r)
    for (int r = 0; r < grid.height; ++r)
        for (int c = 0; c < grid.width; ++c) g.at(c, grid.height - 1 - r) = grid.at(r, c);
    return g;
}

ColoredGrid swap_colors(const ColoredGrid& grid) {
    ColoredGrid g = grid;
    for (CellKind& k : g.cells) {
        if (k == CellKind::Red) k = CellKind::Blue;
        else if (k == CellKind::Blue) k = CellKind::Red;
    }
    return g;
}

}  // namespace gridpaint
