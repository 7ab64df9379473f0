#include "gridpaint/painting.hpp"

#include <array>
#include <queue>

#include "json.hpp"

namespace gridpaint {

Painting Painting::blank(int height, int width, int resolution) {
    Painting p;
    p.height = height;
    p.width = width;
    p.resolution = resolution;
    p.sub.assign(static_cast<size_t>(height) * width * resolution * resolution, kNone);
    return p;
}

Painting refine2(const Painting& p) {
    Painting q = Painting::blank(p.height, p.width, p.resolution * 2);
    for (int gr = 0; gr < p.rows(); ++gr)
        for (int gc = 0; gc < p.cols(); ++gc) {
            uint8_t v = p.at(gr, gc);
            q.at(2 * gr, 2 * gc) = v;
            q.at(2 * gr + 1, 2 * gc) = v;
            q.at(2 * gr, 2 * gc + 1) = v;
            q.at(2 * gr + 1, 2 * gc + 1) = v;
        }
    return q;
}

std::string painting_to_json(const Painting& p) {
    nlohmann::json j;
    j["height"] = p.height;
    j["width"] = p.width;
    j["resolution"] = p.resolution;
    nlohmann::json cells = nlohmann::json::array();
    const int R = p.resolution;
    for (int r = 0; r < p.height; ++r)
        for (int c = 0; c < p.width; ++c) {
            if (p.cell_at(r, c, 0, 0) == Painting::kNone) {
                cells.push_back(nullptr);
                continue;
            }
            nlohmann::json panel = nlohmann::json::array();
            for (int i = 0; i < R; ++i) {
                std::string row(R, '?');
                for (int jx = 0; jx < R; ++jx)
                    row[jx] = p.cell_at(r, c, i, jx) == Painting::kRed ? 'r' : 'b';
                panel.push_back(row);
            }
            cells.push_back(panel);
        }
    j["cells"] = cells;
    return j.dump();
}

Painting painting_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int h = j.at("height").get<int>();
    int w = j.at("width").get<int>();
    int R = j.at("resolution").get<int>();
    if (h < 1 || w < 1 || R < 1) throw FormatError("bad painting dimensions");
    Painting p = Painting::blank(h, w, R);
    const auto& cells = j.at("cells");
    if (static_cast<int>(cells.size()) != h * w) throw FormatError("painting cell count mismatch");
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            const auto& panel = cells[static_cast<size_t>(r) * w + c];
            if (panel.is_null()) continue;
            if (static_cast<int>(panel.size()) != R) throw FormatError("panel row count mismatch");
            for (int i = 0; i < R; ++i) {
                std::string row = panel[i].get<std::string>();
                if (static_cast<int>(row.size()) != R) throw FormatError("panel row length mismatch");
                for (int jx = 0; jx < R; ++jx) {
                    if (row[jx] == 'r') p.cell_at(r, c, i, jx) = Painting::kRed;
                    else if (row[jx] == 'b') p.cell_at(r, c, i, jx) = Painting::kBlue;
                    else throw FormatError("panel characters must be 'r' or 'b'");
                }
            }
        }
    return p;
}

std::pair<int, int> panel_pieces(const Painting& p, int r, int c) {
    const int R = p.resolution;
    std::vector<int> comp(static_cast<size_t>(R) * R, -1);
    int pieces[2] = {0, 0};
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < R; ++j) {
            if (comp[i * R + j] != -1) continue;
            uint8_t v = p.cell_at(r, c, i, j);
            if (v == Painting::kNone) continue;
            ++pieces[v];
            std::queue<std::pair<int, int>> q;
            q.push({i, j});
            comp[i * R + j] = 1;
            while (!q.empty()) {
                auto [ci, cj] = q.front();
                q.pop();
                constexpr int di[4] = {-1, 0, 1, 0}, dj[4] = {0, 1, 0, -1};
                for (int d = 0; d < 4; ++d) {
                    int ni = ci + di[d], nj = cj + dj[d];
                    if (ni < 0 || ni >= R || nj < 0 || nj >= R) continue;
                    if (comp[ni * R + nj] != -1 || p.cell_at(r, c, ni, nj) != v) continue;
                    comp[ni * R + nj] = 1;
                    q.push({ni, nj});
                }
            }
        }
    return {pieces[Painting::kRed], pieces[Painting::kBlue]};
}

std::array<int, 4> panel_side_intervals(const Painting& p, int r, int c) {
    const int R = p.resolution;
    std::array<int, 4> out{};
    auto runs = [&](auto get) {
        int n = 0;
        uint8_t prev = Painting::kNone;
        for (int t = 0; t < R; ++t) {
            uint8_t v = get(t);
            if (t == 0 || v != prev) ++n;
            prev = v;
        }
        return n;
    };
    out[0] = runs([&](int t) { return p.cell_at(r, c, 0, t); });          // N
    out[1] = runs([&](int t) { return p.cell_at(r, c, t, R - 1); });      // E
    out[2] = runs([&](int t) { return p.cell_at(r, c, R - 1, t); });      // S
    out[3] = runs([&](int t) { return p.cell_at(r, c, t, 0); });          // W
    return out;
}

}  // namespace gridpaint
