#include "gridpaint/verifier.hpp"

#include <queue>
#include <sstream>

namespace gridpaint {

ValidationReport validate_painting(const ColoredGrid& grid, const Painting& p) {
    ValidationReport rep;
    auto fail = [&](const std::string& kind, int r, int c, const std::string& d) {
        rep.violations.push_back({kind, r, c, d});
    };

    if (p.height != grid.height || p.width != grid.width || p.resolution < 1 ||
        p.sub.size() != static_cast<size_t>(p.rows()) * p.cols()) {
        fail("shape-mismatch", -1, -1, "painting dimensions do not match the grid");
        rep.ok = false;
        return rep;
    }
    const int R = p.resolution;

    for (int r = 0; r < grid.height; ++r)
        for (int c = 0; c < grid.width; ++c) {
            CellKind k = grid.at(r, c);
            bool has_r = false, has_b = false, has_none = false;
            for (int i = 0; i < R; ++i)
                for (int j = 0; j < R; ++j) {
                    uint8_t v = p.cell_at(r, c, i, j);
                    has_r |= v == Painting::kRed;
                    has_b |= v == Painting::kBlue;
                    has_none |= v == Painting::kNone;
                }
            if (k == CellKind::White) {
                if (has_r || has_b) fail("extra-color", r, c, "white cell carries a panel");
                continue;
            }
            if (has_none) {
                fail("shape-mismatch", r, c, "panel has unpainted subcells");
                continue;
            }
            if (has_r && !cell_has(k, Color::Red)) fail("extra-color", r, c, "red outside chi");
            if (has_b && !cell_has(k, Color::Blue)) fail("extra-color", r, c, "blue outside chi");
            if (cell_has(k, Color::Red) && !has_r) fail("missing-color", r, c, "no red piece");
            if (cell_has(k, Color::Blue) && !has_b) fail("missing-color", r, c, "no blue piece");
        }

    // global connectivity per color over the subcell grid
    for (uint8_t color : {Painting::kRed, Painting::kBlue}) {
        int total = 0, sr = -1, sc = -1;
        for (int gr = 0; gr < p.rows(); ++gr)
            for (int gc = 0; gc < p.cols(); ++gc)
                if (p.at(gr, gc) == color) {
                    ++total;
                    if (sr < 0) sr = gr, sc = gc;
                }
        if (total == 0) continue;  // vacuously connected
        std::vector<uint8_t> seen(p.sub.size(), 0);
        std::queue<std::pair<int, int>> q;
        q.push({sr, sc});
        seen[static_cast<size_t>(sr) * p.cols() + sc] = 1;
        int reached = 0;
        while (!q.empty()) {
            auto [gr, gc] = q.front();
            q.pop();
            ++reached;
            constexpr int di[4] = {-1, 0, 1, 0}, dj[4] = {0, 1, 0, -1};
            for (int d = 0; d < 4; ++d) {
                int nr = gr + di[d], nc = gc + dj[d];
                if (!p.in_bounds(nr, nc) || p.at(nr, nc) != color) continue;
                size_t idx = static_cast<size_t>(nr) * p.cols() + nc;
                if (seen[idx]) continue;
                seen[idx] = 1;
                q.push({nr, nc});
            }
        }
        if (reached != total) {
            // report a subcell of some unreached component
            bool done = false;
            for (int gr = 0; gr < p.rows() && !done; ++gr)
                for (int gc = 0; gc < p.cols() && !done; ++gc)
                    if (p.at(gr, gc) == color && !seen[static_cast<size_t>(gr) * p.cols() + gc]) {
                        fail("color-disconnected", gr / R, gc / R,
                             std::string(color == Painting::kRed ? "red" : "blue") + " splits into pieces");
                        done = true;
                    }
        }
    }

    rep.ok = rep.violations.empty();
    return rep;
}

std::string report_to_json(const ValidationReport& rep) {
    std::ostringstream os;
    os << "{\"ok\":" << (rep.ok ? "true" : "false") << ",\"violations\":[";
    for (size_t i = 0; i < rep.violations.size(); ++i) {
        const Violation& v = rep.violations[i];
        if (i) os << ",";
        os << "{\"col\":" << v.col << ",\"detail\":\"" << v.detail << "\",\"kind\":\"" << v.kind
           << "\",\"row\":" << v.row << "}";
    }
    os << "]}";
    return os.str();
}

}  // namespace gridpaint
