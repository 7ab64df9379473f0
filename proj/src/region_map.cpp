#include "gridpaint/region_map.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace gridpaint {

namespace {

constexpr int kDR[4] = {-1, 0, 1, 0};
constexpr int kDC[4] = {0, 1, 0, -1};

// Direction of travel along a boundary edge, keeping interior on the right:
// N edge -> east, E -> south, S -> west, W -> north.
// Walk successor of a directed boundary edge. `in_region` answers membership.
// At a pinch corner both a right turn and a left turn exist; the right turn
// keeps the cycles simple, so candidates are tried right, straight, left.
template <typename F>
BoundaryEdge walk_next(const BoundaryEdge& e, F&& in_region) {
    // Tables derived from the four cells around the head corner of `e`.
    // For an N edge of (r,c) heading east, the head corner is (r, c+1):
    //   right turn: E edge of (r,c)         requires (r,c+1) outside
    //   straight:   N edge of (r,c+1)       requires (r,c+1) inside, (r-1,c+1) outside
    //   left turn:  W edge of (r-1,c+1)     requires (r-1,c+1) inside
    // The other sides follow by rotation.
    struct Cand {
        int dr, dc, side;
    };
    static const Cand rights[4] = {{0, 0, 1}, {0, 0, 2}, {0, 0, 3}, {0, 0, 0}};
    static const Cand straights[4] = {{0, 1, 0}, {1, 0, 1}, {0, -1, 2}, {-1, 0, 3}};
    static const Cand lefts[4] = {{-1, 1, 3}, {1, 1, 0}, {1, -1, 1}, {-1, -1, 2}};

    auto exists = [&](const Cand& c) {
        int r = e.row + c.dr;
        int cc = e.col + c.dc;
        if (!in_region(r, cc)) return false;
        int nr = r + kDR[c.side];
        int nc = cc + kDC[c.side];
        return !in_region(nr, nc);
    };
    const Cand* order[3] = {&rights[e.side], &straights[e.side], &lefts[e.side]};
    for (const Cand* c : order) {
        if (exists(*c)) return BoundaryEdge{e.row + c->dr, e.col + c->dc, c->side};
    }
    assert(false && "boundary walk has no successor");
    return e;
}

struct CycleInfo {
    std::vector<BoundaryEdge> edges;
    int complement_label = -1;  // 0 = outside, >0 = hole index + 1
};

}  // namespace

int count_colored(const std::vector<NeighborInterval>& cycle) {
    int n = 0;
    for (const auto& iv : cycle) n += !iv.is_gap;
    return n;
}

const PurpleProfile& RegionMap::profile_for(int region_id) const {
    for (const auto& p : purple_profiles)
        if (p.region_id == region_id) return p;
    throw NotPurple(region_id);
}

RegionMap decompose_regions(const ColoredGrid& grid) {
    RegionMap map;
    map.grid = grid;
    map.cell_to_region.assign(grid.cells.size(), -1);

    for (int r = 0; r < grid.height; ++r) {
        for (int c = 0; c < grid.width; ++c) {
            if (grid.at(r, c) == CellKind::White || map.region_at(r, c) != -1) continue;
            Region reg;
            reg.id = static_cast<int>(map.regions.size());
            reg.colorset = grid.at(r, c);
            std::queue<std::pair<int, int>> q;
            q.push({r, c});
            map.cell_to_region[static_cast<size_t>(r) * grid.width + c] = reg.id;
            while (!q.empty()) {
                auto [cr, cc] = q.front();
                q.pop();
                reg.cells.push_back({cr, cc});
                for (int d = 0; d < 4; ++d) {
                    int nr = cr + kDR[d], nc = cc + kDC[d];
                    if (!grid.in_bounds(nr, nc)) continue;
                    if (grid.at(nr, nc) != reg.colorset) continue;
                    size_t idx = static_cast<size_t>(nr) * grid.width + nc;
                    if (map.cell_to_region[idx] != -1) continue;
                    map.cell_to_region[idx] = reg.id;
                    q.push({nr, nc});
                }
            }
            std::sort(reg.cells.begin(), reg.cells.end());
            map.regions.push_back(std::move(reg));
        }
    }

    for (const Region& reg : map.regions) {
        if (reg.colorset == CellKind::Purple) map.purple_profiles.push_back(boundary_cycle(map, reg.id));
    }
    return map;
}

namespace {

// Assembles the interval list of one cycle: runs of edges sharing the same
// neighbor region, gaps for white/off-grid stretches, cyclic wrap merged.
std::vector<NeighborInterval> intervals_of_cycle(const RegionMap& map, const std::vector<BoundaryEdge>& cycle) {
    const ColoredGrid& g = map.grid;
    std::vector<NeighborInterval> out;
    for (const BoundaryEdge& e : cycle) {
        auto [ar, ac] = across(e);
        bool gap = true;
        int nbr = -1;
        Color col = Color::Red;
        if (g.in_bounds(ar, ac) && g.at(ar, ac) != CellKind::White) {
            CellKind k = g.at(ar, ac);
            assert(k != CellKind::Purple && "purple cells across a purple boundary must share the region");
            gap = false;
            nbr = map.region_at(ar, ac);
            col = (k == CellKind::Red) ? Color::Red : Color::Blue;
        }
        if (!out.empty() && out.back().is_gap == gap && (gap || out.back().region_id == nbr)) {
            out.back().edges.push_back(e);
        } else {
            NeighborInterval iv;
            iv.is_gap = gap;
            iv.region_id = nbr;
            iv.color = col;
            iv.edges.push_back(e);
            out.push_back(std::move(iv));
        }
    }
    // merge cyclic wrap
    if (out.size() > 1) {
        NeighborInterval& first = out.front();
        NeighborInterval& last = out.back();
        if (first.is_gap == last.is_gap && (first.is_gap || first.region_id == last.region_id)) {
            last.edges.insert(last.edges.end(), first.edges.begin(), first.edges.end());
            first = std::move(last);
            out.pop_back();
        }
    }
    return out;
}

}  // namespace

PurpleProfile boundary_cycle(const RegionMap& map, int purple_id) {
    if (purple_id < 0 || purple_id >= static_cast<int>(map.regions.size())) throw NotPurple(purple_id);
    const Region& reg = map.regions[purple_id];
    if (reg.colorset != CellKind::Purple) throw NotPurple(purple_id);
    const ColoredGrid& g = map.grid;

    auto in_region = [&](int r, int c) {
        return g.in_bounds(r, c) && map.region_at(r, c) == purple_id;
    };

    // Complement labeling over the inflated bounding box: label 0 is the
    // unbounded outside; labels 1.. are holes discovered in scanline order.
    int r0 = reg.cells.front().first, r1 = r0, c0 = reg.cells.front().second, c1 = c0;
    for (auto [r, c] : reg.cells) {
        r0 = std::min(r0, r), r1 = std::max(r1, r);
        c0 = std::min(c0, c), c1 = std::max(c1, c);
    }
    --r0, --c0, ++r1, ++c1;
    int bh = r1 - r0 + 1, bw = c1 - c0 + 1;
    std::vector<int> label(static_cast<size_t>(bh) * bw, -1);
    auto lab = [&](int r, int c) -> int& { return label[static_cast<size_t>(r - r0) * bw + (c - c0)]; };
    auto in_box = [&](int r, int c) { return r >= r0 && r <= r1 && c >= c0 && c <= c1; };

    std::queue<std::pair<int, int>> q;
    q.push({r0, c0});
    lab(r0, c0) = 0;
    while (!q.empty()) {
        auto [r, c] = q.front();
        q.pop();
        for (int d = 0; d < 4; ++d) {
            int nr = r + kDR[d], nc = c + kDC[d];
            if (!in_box(nr, nc) || in_region(nr, nc) || lab(nr, nc) != -1) continue;
            lab(nr, nc) = 0;
            q.push({nr, nc});
        }
    }
    PurpleProfile prof;
    prof.region_id = purple_id;
    int next_hole = 1;
    for (int r = r0; r <= r1; ++r) {
        for (int c = c0; c <= c1; ++c) {
            if (in_region(r, c) || lab(r, c) != -1) continue;
            std::vector<std::pair<int, int>> cells;
            q.push({r, c});
            lab(r, c) = next_hole;
            while (!q.empty()) {
                auto [hr, hc] = q.front();
                q.pop();
                cells.push_back({hr, hc});
                for (int d = 0; d < 4; ++d) {
                    int nr = hr + kDR[d], nc = hc + kDC[d];
                    if (!in_box(nr, nc) || in_region(nr, nc) || lab(nr, nc) != -1) continue;
                    lab(nr, nc) = next_hole;
                    q.push({nr, nc});
                }
            }
            std::sort(cells.begin(), cells.end());
            prof.hole_cells.push_back(std::move(cells));
            ++next_hole;
        }
    }

    // Trace all boundary cycles. Deterministic start: edges enumerated over
    // sorted cells, sides N,E,S,W.
    std::set<std::tuple<int, int, int>> seen;
    std::vector<CycleInfo> cycles;
    for (auto [r, c] : reg.cells) {
        for (int side = 0; side < 4; ++side) {
            if (in_region(r + kDR[side], c + kDC[side])) continue;
            if (seen.count({r, c, side})) continue;
            CycleInfo ci;
            BoundaryEdge start{r, c, side};
            BoundaryEdge e = start;
            do {
                seen.insert({e.row, e.col, e.side});
                ci.edges.push_back(e);
                e = walk_next(e, in_region);
            } while (!(e == start));
            auto [ar, ac] = across(ci.edges.front());
            ci.complement_label = in_box(ar, ac) ? lab(ar, ac) : 0;
            cycles.push_back(std::move(ci));
        }
    }

    int outer_count = 0;
    std::vector<std::vector<BoundaryEdge>> hole_edges(prof.hole_cells.size());
    for (auto& ci : cycles) {
        if (ci.complement_label == 0) {
            ++outer_count;
            prof.boundary_cycle = intervals_of_cycle(map, ci.edges);
        } else {
            hole_edges[ci.complement_label - 1] = std::move(ci.edges);
        }
    }
    assert(outer_count == 1 && "exactly one outer boundary cycle");
    for (auto& he : hole_edges) {
        assert(!he.empty() && "each hole is bounded by exactly one cycle");
        prof.hole_cycles.push_back(intervals_of_cycle(map, he));
    }
    prof.kappa = count_colored(prof.boundary_cycle);
    return prof;
}

int count_holes(const RegionMap& map, int purple_id) {
    return boundary_cycle(map, purple_id).holes();
}

std::string region_map_to_json(const RegionMap& map) {
    // kept dependency-light here; the CLI adds pretty-printing via nlohmann
    std::ostringstream os;
    os << "{\"height\":" << map.grid.height << ",\"regions\":[";
    for (size_t i = 0; i < map.regions.size(); ++i) {
        const Region& r = map.regions[i];
        if (i) os << ",";
        os << "{\"cells\":[";
        for (size_t j = 0; j < r.cells.size(); ++j) {
            if (j) os << ",";
            os << "[" << r.cells[j].first << "," << r.cells[j].second << "]";
        }
        os << "],\"colorset\":\"" << cell_char(r.colorset) << "\",\"id\":" << r.id;
        if (r.colorset == CellKind::Purple) {
            const PurpleProfile& p = map.profile_for(r.id);
            os << ",\"holes\":" << p.holes() << ",\"kappa\":" << p.kappa;
        }
        os << "}";
    }
    os << "],\"width\":" << map.grid.width << "}";
    return os.str();
}

}  // namespace gridpaint
