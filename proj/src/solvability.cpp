#include "gridpaint/solvability.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

namespace gridpaint {

namespace {

struct UF {
    std::vector<int> parent;
    explicit UF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);  // keep the smallest id as representative
        parent[b] = a;
    }
};

}  // namespace

std::vector<int> MergedProfile::colored_positions() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
        if (!cycle[i].is_gap) out.push_back(i);
    return out;
}

int AnalyzedGrid::find_class(int region_id) const {
    int x = region_id;
    while (region_class[x] != x) x = region_class[x];
    return x;
}

const MergedProfile& AnalyzedGrid::profile_of(int purple_id) const {
    for (const auto& p : profiles)
        if (p.purple_id == purple_id) return p;
    throw NotPurple(purple_id);
}

// ════════════════════════════════════════════════════════════════════
//  Spiderweb gadget
// ════════════════════════════════════════════════════════════════════

int SpiderwebGadget::vertex_id(int level, int label) const {
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        if (vertices[i].level == level && vertices[i].label == label) return i;
    return -1;
}

int SpiderwebGadget::innermost_vertex() const { return static_cast<int>(vertices.size()) - 1; }

std::vector<int> SpiderwebGadget::red_edge_ids() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        if (edges[i].color == Color::Red) out.push_back(i);
    return out;
}
std::vector<int> SpiderwebGadget::blue_edge_ids() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        if (edges[i].color == Color::Blue) out.push_back(i);
    return out;
}

SpiderwebGadget build_spiderweb(int k) {
    if (k < 3) throw InvalidK(k);
    SpiderwebGadget g;
    g.k = k;
    g.innermost_level = k / 2 + 1;
    const int L = g.innermost_level;
    auto level_color = [](int level) { return (level % 2 == 0) ? Color::Blue : Color::Red; };

    // Vertices level by level. Level-l labels share l's parity and run
    // clockwise: even labels 0..2k-2 on blue levels, odd 1..2k-1 on red ones.
    for (int l = 0; l < L; ++l)
        for (int j = 0; j < k; ++j) g.vertices.push_back({l, 2 * j + (l % 2), level_color(l)});
    g.vertices.push_back({L, -1, level_color(L)});

    auto vid = [&](int level, int label) {
        if (level == L) return static_cast<int>(g.vertices.size()) - 1;
        return level * k + ((label - (level % 2)) / 2 + k) % k;
    };

    // Cycle edges on levels 1..L-1, then spokes from level l to l-2
    // (2 <= l <= L-1), then the innermost fan to level L-2.
    for (int l = 1; l < L; ++l)
        for (int j = 0; j < k; ++j) {
            int a = 2 * j + (l % 2);
            int b = (a + 2) % (2 * k);
            g.edges.push_back({level_color(l), vid(l, a), vid(l, b), 0, l, a});
        }
    for (int l = 2; l < L; ++l)
        for (int j = 0; j < k; ++j) {
            int a = 2 * j + (l % 2);
            g.edges.push_back({level_color(l), vid(l, a), vid(l - 2, a), 1, l, a});
        }
    for (int j = 0; j < k; ++j) {
        int a = 2 * j + (L % 2);
        g.edges.push_back({level_color(L), vid(L, -1), vid(L - 2, a), 2, L, a});
    }

    // Crossing bijection: the spoke descending from (l, t) to (l-2, t) crosses
    // the level-(l-1) cycle edge between labels t-1 and t+1, i.e. the cycle
    // edge anchored at label (t-1) mod 2k.
    auto cycle_edge_index = [&](int level, int anchor) {
        for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
            if (g.edges[i].kind == 0 && g.edges[i].level == level && g.edges[i].label == anchor) return i;
        return -1;
    };
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        const auto& e = g.edges[i];
        if (e.kind == 0) continue;
        int anchor = (e.label - 1 + 2 * g.k) % (2 * g.k);
        int j = cycle_edge_index(e.level - 1, anchor);
        assert(j >= 0);
        if (e.color == Color::Red) g.crossings.push_back({i, j});
        else g.crossings.push_back({j, i});
    }
    std::sort(g.crossings.begin(), g.crossings.end());
    assert(g.crossings.size() * 2 == g.edges.size());
    return g;
}

std::vector<int> bridging_path(const SpiderwebGadget& g, int u, int v) {
    const int k = g.k;
    if (u < 0 || v < 0 || u >= static_cast<int>(g.vertices.size()) || v >= static_cast<int>(g.vertices.size()))
        throw BadEndpoints("vertex id out of range");
    Color c = g.color_of(u);
    if (c != g.color_of(v)) throw BadEndpoints("endpoints differ in color");
    int outer = (c == Color::Blue) ? 0 : 1;
    if (g.level_of(u) != outer || g.level_of(v) != outer)
        throw BadEndpoints("endpoints must lie on the outermost level of their color");
    int x = g.label_of(u), y = g.label_of(v);
    int i = ((((y - x) % (2 * k)) + 2 * k) % (2 * k)) / 2;
    if (i < 1 || i > k / 2) throw BadEndpoints("clockwise distance out of range");

    int target = (c == Color::Blue) ? 2 * ((i + 1) / 2) : 2 * (i / 2) + 1;
    const int L = g.innermost_level;
    std::vector<int> path;

    // spoke up from u
    for (int l = outer; l <= std::min(target, L - 1); l += 2) path.push_back(g.vertex_id(l, x));
    if (target == L) {
        path.push_back(g.innermost_vertex());
    } else {
        // shortest arc within the target level; clockwise wins ties
        int cw = i, ccw = k - i;
        int step = (cw <= ccw) ? 2 : -2;
        int steps = std::min(cw, ccw);
        int lab = x;
        for (int s = 0; s < steps; ++s) {
            lab = ((lab + step) % (2 * k) + 2 * k) % (2 * k);
            path.push_back(g.vertex_id(target, lab));
        }
    }
    // spoke down to v
    int top = (target == L) ? L - 2 : target - 2;
    for (int l = top; l >= outer; l -= 2) path.push_back(g.vertex_id(l, y));
    return path;
}

// ════════════════════════════════════════════════════════════════════
//  Step 1: boundary merges
// ════════════════════════════════════════════════════════════════════

namespace {

std::vector<CycleEntry> to_entries(const std::vector<NeighborInterval>& cycle) {
    std::vector<CycleEntry> out;
    out.reserve(cycle.size());
    for (const auto& iv : cycle) {
        CycleEntry e;
        e.is_gap = iv.is_gap;
        e.color = iv.color;
        e.region_id = iv.region_id;
        if (iv.is_gap) e.span = iv.edges;
        else e.contact = e.span = iv.edges;
        out.push_back(std::move(e));
    }
    return out;
}

int next_colored(const std::vector<CycleEntry>& cycle, int i) {
    int n = static_cast<int>(cycle.size());
    for (int s = 1; s <= n; ++s) {
        int j = (i + s) % n;
        if (!cycle[j].is_gap) return j;
    }
    return -1;
}

// One full merge fixpoint over a cyclic entry list. Consecutive same-color
// colored entries (gaps between them are absorbed into the merged span) are
// joined, the neighbor classes united, and a connection recorded.
void merge_pass(int purple_id, std::vector<CycleEntry>& cycle, UF& uf,
                std::vector<BoundaryConnection>& out) {
    bool changed = true;
    while (changed) {
        changed = false;
        int n = static_cast<int>(cycle.size());
        if (n == 0) return;
        for (int i = 0; i < n; ++i) {
            if (cycle[i].is_gap) continue;
            int j = next_colored(cycle, i);
            if (j == i || j < 0) break;  // single colored interval left
            if (cycle[j].color != cycle[i].color) continue;

            BoundaryConnection bc;
            bc.purple_id = purple_id;
            bc.color = cycle[i].color;
            bc.port_a = cycle[i].contact;
            bc.port_b = cycle[j].contact;
            for (int s = (i + 1) % n; s != j; s = (s + 1) % n) {
                assert(cycle[s].is_gap);
                bc.arc.insert(bc.arc.end(), cycle[s].span.begin(), cycle[s].span.end());
            }
            out.push_back(bc);
            uf.unite(cycle[i].region_id, cycle[j].region_id);

            CycleEntry merged;
            merged.is_gap = false;
            merged.color = cycle[i].color;
            merged.region_id = std::min(cycle[i].region_id, cycle[j].region_id);
            merged.contact = cycle[i].contact;
            merged.contact.insert(merged.contact.end(), cycle[j].contact.begin(), cycle[j].contact.end());
            merged.span = cycle[i].span;
            merged.span.insert(merged.span.end(), bc.arc.begin(), bc.arc.end());
            merged.span.insert(merged.span.end(), cycle[j].span.begin(), cycle[j].span.end());

            // rebuild: entries after j up to i (exclusive), then the merged one
            std::vector<CycleEntry> next;
            for (int s = (j + 1) % n; s != i; s = (s + 1) % n) next.push_back(cycle[s]);
            next.push_back(std::move(merged));
            cycle = std::move(next);
            changed = true;
            break;
        }
    }
}

std::vector<Color> colors_on(const std::vector<CycleEntry>& cycle) {
    bool r = false, b = false;
    for (const auto& e : cycle)
        if (!e.is_gap) ((e.color == Color::Red) ? r : b) = true;
    std::vector<Color> out;
    if (r) out.push_back(Color::Red);
    if (b) out.push_back(Color::Blue);
    return out;
}

int first_colored_of(const std::vector<CycleEntry>& cycle, Color c) {
    for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
        if (!cycle[i].is_gap && cycle[i].color == c) return i;
    return -1;
}

// Splices one hole cycle into the current outer cycle. A corridor is
// installed for every color present on both sides; with no corridors the
// cut degenerates to a seam and the hole cycle joins the outer walk as-is.
HoleCut splice_hole(int purple_id, int hole_index, std::vector<CycleEntry>& outer,
                    const std::vector<CycleEntry>& hole, UF& uf) {
    HoleCut cut;
    cut.purple_id = purple_id;
    cut.hole_index = hole_index;

    auto has = [](const std::vector<Color>& v, Color c) {
        return std::find(v.begin(), v.end(), c) != v.end();
    };
    std::vector<Color> inside = colors_on(hole);
    std::vector<Color> outside = colors_on(outer);
    bool red_corridor = has(inside, Color::Red) && has(outside, Color::Red);
    bool blue_corridor = has(inside, Color::Blue) && has(outside, Color::Blue);

    const int m = static_cast<int>(hole.size());
    auto hole_rest = [&](int from, int to) {  // entries strictly between, cyclic
        std::vector<CycleEntry> out;
        if (m == 0) return out;
        for (int s = (from + 1) % m; s != to; s = (s + 1) % m) out.push_back(hole[s]);
        return out;
    };
    auto merged_entry = [&](const CycleEntry& out_e, const CycleEntry& in_e) {
        CycleEntry e;
        e.is_gap = false;
        e.color = out_e.color;
        e.region_id = std::min(out_e.region_id, in_e.region_id);
        e.contact = out_e.contact;
        e.contact.insert(e.contact.end(), in_e.contact.begin(), in_e.contact.end());
        e.span = e.contact;
        return e;
    };

    if (red_corridor && blue_corridor) {
        // channel between a (R_in, B_in) pair on the hole and a (B_out, R_out)
        // pair on the outer cycle; the walk enters along the blue corridor,
        // rounds the hole, and leaves along the red one
        int a = first_colored_of(hole, Color::Red);
        int b = next_colored(hole, a);
        assert(b >= 0 && hole[b].color == Color::Blue);
        int p = first_colored_of(outer, Color::Blue);
        int q = next_colored(outer, p);
        assert(q >= 0 && outer[q].color == Color::Red);

        cut.corridors.push_back({Color::Red, hole[a].contact, outer[q].contact});
        cut.corridors.push_back({Color::Blue, hole[b].contact, outer[p].contact});
        uf.unite(hole[a].region_id, outer[q].region_id);
        uf.unite(hole[b].region_id, outer[p].region_id);

        std::vector<CycleEntry> next;
        int n = static_cast<int>(outer.size());
        for (int s = (q + 1) % n; s != p; s = (s + 1) % n) next.push_back(outer[s]);
        next.push_back(merged_entry(outer[p], hole[b]));
        auto mid = hole_rest(b, a);
        next.insert(next.end(), mid.begin(), mid.end());
        next.push_back(merged_entry(outer[q], hole[a]));
        outer = std::move(next);
    } else if (red_corridor || blue_corridor) {
        Color c = red_corridor ? Color::Red : Color::Blue;
        int a = first_colored_of(hole, c);
        int p = first_colored_of(outer, c);
        cut.corridors.push_back({c, hole[a].contact, outer[p].contact});
        uf.unite(hole[a].region_id, outer[p].region_id);

        std::vector<CycleEntry> next;
        int n = static_cast<int>(outer.size());
        for (int s = (p + 1) % n; s != p; s = (s + 1) % n) next.push_back(outer[s]);
        next.push_back(merged_entry(outer[p], hole[a]));
        auto mid = hole_rest(a, a);  // everything after a, wrapping, excluding a
        next.insert(next.end(), mid.begin(), mid.end());
        outer = std::move(next);
    } else {
        std::vector<CycleEntry> next(hole.begin(), hole.end());
        next.insert(next.end(), outer.begin(), outer.end());
        outer = std::move(next);
    }
    return cut;
}

void check_alternating(int purple_id, const std::vector<CycleEntry>& cycle) {
    std::vector<int> pos;
    for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
        if (!cycle[i].is_gap) pos.push_back(i);
    if (pos.size() <= 1) return;
    for (size_t i = 0; i < pos.size(); ++i) {
        Color c1 = cycle[pos[i]].color;
        Color c2 = cycle[pos[(i + 1) % pos.size()]].color;
        if (c1 == c2) throw NonAlternating(purple_id);
    }
}

}  // namespace

MergeResult merge_consecutive_same_color(const RegionMap& map, const PurpleProfile& prof) {
    UF uf(static_cast<int>(map.regions.size()));
    MergeResult res;
    res.outer = to_entries(prof.boundary_cycle);
    merge_pass(prof.region_id, res.outer, uf, res.connections);
    for (const auto& hc : prof.hole_cycles) {
        res.holes.push_back(to_entries(hc));
        merge_pass(prof.region_id, res.holes.back(), uf, res.connections);
    }
    return res;
}

HoleReductionResult reduce_holes(const RegionMap& map) {
    HoleReductionResult res;
    UF uf(static_cast<int>(map.regions.size()));

    for (const PurpleProfile& prof : map.purple_profiles) {
        std::vector<CycleEntry> outer = to_entries(prof.boundary_cycle);
        std::vector<BoundaryConnection> conns;
        merge_pass(prof.region_id, outer, uf, conns);

        // holes in scanline order of their top-left enclosed cell
        std::vector<int> order(prof.hole_cycles.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return prof.hole_cells[a].front() < prof.hole_cells[b].front();
        });
        for (int h : order) {
            std::vector<CycleEntry> hole = to_entries(prof.hole_cycles[h]);
            merge_pass(prof.region_id, hole, uf, conns);
            res.cuts.push_back(splice_hole(prof.region_id, h, outer, hole, uf));
            merge_pass(prof.region_id, outer, uf, conns);
        }
        check_alternating(prof.region_id, outer);
        res.profiles.push_back({prof.region_id, std::move(outer)});
        res.connections.insert(res.connections.end(), conns.begin(), conns.end());
    }
    res.region_class = uf.parent;
    for (int i = 0; i < static_cast<int>(res.region_class.size()); ++i) res.region_class[i] = uf.find(i);
    return res;
}

// ════════════════════════════════════════════════════════════════════
//  Dual pair and verdict
// ════════════════════════════════════════════════════════════════════

namespace {

struct VertexTable {
    std::map<int, int> class_to_vertex;  // representative region id -> vertex
    int count = 0;
    std::vector<int> class_region;
    std::vector<int> internal_purple;

    int vertex_for_class(int rep) {
        auto it = class_to_vertex.find(rep);
        assert(it != class_to_vertex.end());
        return it->second;
    }
    int add_internal(int purple_id) {
        internal_purple.push_back(purple_id);
        return count++;
    }
};

bool is_connected(int n, const std::vector<DualEdge>& edges) {
    if (n == 0) return true;
    UF uf(n);
    for (const auto& e : edges) uf.unite(e.u, e.v);
    int root = uf.find(0);
    for (int i = 1; i < n; ++i)
        if (uf.find(i) != root) return false;
    return true;
}

}  // namespace

AnalyzedGrid analyze(const ColoredGrid& grid) {
    AnalyzedGrid ag;
    ag.map = decompose_regions(grid);
    HoleReductionResult hr = reduce_holes(ag.map);
    ag.profiles = std::move(hr.profiles);
    ag.connections = std::move(hr.connections);
    ag.cuts = std::move(hr.cuts);
    ag.region_class = std::move(hr.region_class);

    // vertex tables: merged classes of colored regions, smallest-id order
    VertexTable red, blue;
    for (const Region& r : ag.map.regions) {
        if (r.colorset != CellKind::Red && r.colorset != CellKind::Blue) continue;
        VertexTable& t = (r.colorset == CellKind::Red) ? red : blue;
        int rep = ag.find_class(r.id);
        if (!t.class_to_vertex.count(rep)) {
            t.class_to_vertex[rep] = t.count++;
            t.class_region.push_back(rep);
        }
    }
    ag.pair.n_r_regions = red.count;
    ag.pair.n_b_regions = blue.count;

    auto class_vertex = [&](Color c, int region_id) {
        VertexTable& t = (c == Color::Red) ? red : blue;
        return t.vertex_for_class(ag.find_class(region_id));
    };

    for (const MergedProfile& mp : ag.profiles) {
        std::vector<int> pos = mp.colored_positions();
        int kappa = static_cast<int>(pos.size());
        bool has_red = false, has_blue = false;
        for (int p : pos) ((mp.cycle[p].color == Color::Red) ? has_red : has_blue) = true;

        // a color with no boundary interval lives enclosed in this region
        if (!has_red) red.add_internal(mp.purple_id);
        if (!has_blue) blue.add_internal(mp.purple_id);
        if (kappa <= 2) continue;
        if (kappa % 2 != 0) throw NonAlternating(mp.purple_id);

        if (kappa == 4) {
            int r1 = -1, r2 = -1, b1 = -1, b2 = -1;
            for (int i = 0; i < 4; ++i) {
                const CycleEntry& e = mp.cycle[pos[i]];
                if (e.color == Color::Red) (r1 < 0 ? r1 : r2) = i;
                else (b1 < 0 ? b1 : b2) = i;
            }
            DualEdge re{Color::Red,
                        class_vertex(Color::Red, mp.cycle[pos[r1]].region_id),
                        class_vertex(Color::Red, mp.cycle[pos[r2]].region_id),
                        mp.purple_id,
                        static_cast<int>(ag.pair.blue_edges.size()),
                        EdgeKind::K4Chord,
                        r1,
                        r2,
                        -1};
            DualEdge be{Color::Blue,
                        class_vertex(Color::Blue, mp.cycle[pos[b1]].region_id),
                        class_vertex(Color::Blue, mp.cycle[pos[b2]].region_id),
                        mp.purple_id,
                        static_cast<int>(ag.pair.red_edges.size()),
                        EdgeKind::K4Chord,
                        b1,
                        b2,
                        -1};
            ag.pair.red_edges.push_back(re);
            ag.pair.blue_edges.push_back(be);
            continue;
        }

        // kappa > 4: spiderweb gadget
        int k = kappa / 2;
        GadgetInstance gi;
        gi.gadget = build_spiderweb(k);
        gi.label_to_occ.assign(2 * k, -1);
        bool first_blue = (mp.cycle[pos[0]].color == Color::Blue);
        for (int t = 0; t < kappa; ++t) {
            int label = first_blue ? t : (t + 1) % (2 * k);
            gi.label_to_occ[label] = t;
        }

        gi.vertex_to_dual.assign(gi.gadget.vertices.size(), -1);
        for (int vi = 0; vi < static_cast<int>(gi.gadget.vertices.size()); ++vi) {
            const auto& gv = gi.gadget.vertices[vi];
            if (gv.level <= 1) {
                int occ = gi.label_to_occ[gv.label];
                const CycleEntry& e = mp.cycle[pos[occ]];
                assert((e.color == Color::Blue) == (gv.color == Color::Blue));
                gi.vertex_to_dual[vi] = class_vertex(gv.color, e.region_id);
            } else {
                VertexTable& t = (gv.color == Color::Red) ? red : blue;
                gi.vertex_to_dual[vi] = t.add_internal(mp.purple_id);
            }
        }

        std::vector<int> edge_to_dual(gi.gadget.edges.size(), -1);
        auto occ_of = [&](int gvid) {
            const auto& gv = gi.gadget.vertices[gvid];
            return gv.level <= 1 ? gi.label_to_occ[gv.label] : -1;
        };
        auto kind_of = [](int gkind) {
            return gkind == 0 ? EdgeKind::GadgetCycle
                              : (gkind == 1 ? EdgeKind::GadgetSpoke : EdgeKind::GadgetInnermost);
        };
        for (int ei = 0; ei < static_cast<int>(gi.gadget.edges.size()); ++ei) {
            const auto& ge = gi.gadget.edges[ei];
            DualEdge de{ge.color,
                        gi.vertex_to_dual[ge.u],
                        gi.vertex_to_dual[ge.v],
                        mp.purple_id,
                        -1,
                        kind_of(ge.kind),
                        occ_of(ge.u),
                        occ_of(ge.v),
                        ei};
            auto& list = (ge.color == Color::Red) ? ag.pair.red_edges : ag.pair.blue_edges;
            edge_to_dual[ei] = static_cast<int>(list.size());
            list.push_back(de);
        }
        for (auto [re, be] : gi.gadget.crossings) {
            ag.pair.red_edges[edge_to_dual[re]].cross = edge_to_dual[be];
            ag.pair.blue_edges[edge_to_dual[be]].cross = edge_to_dual[re];
        }
        ag.gadgets.emplace(mp.purple_id, std::move(gi));
    }

    ag.pair.n_r = red.count;
    ag.pair.n_b = blue.count;
    ag.pair.red_class_region = red.class_region;
    ag.pair.blue_class_region = blue.class_region;
    ag.pair.red_internal_purple = red.internal_purple;
    ag.pair.blue_internal_purple = blue.internal_purple;
    assert(ag.pair.red_edges.size() == ag.pair.blue_edges.size());

    Verdict v;
    v.n_r = ag.pair.n_r;
    v.n_b = ag.pair.n_b;
    v.e = ag.pair.e();
    v.red_connected = is_connected(v.n_r, ag.pair.red_edges);
    v.blue_connected = is_connected(v.n_b, ag.pair.blue_edges);
    int needed = (v.n_r > 0 ? v.n_r - 1 : 0) + (v.n_b > 0 ? v.n_b - 1 : 0);
    v.solvable = v.red_connected && v.blue_connected && v.e == needed;
    ag.verdict = v;
    return ag;
}

Verdict admits_painting(const ColoredGrid& grid) { return analyze(grid).verdict; }

std::string dual_pair_to_json(const AnalyzedGrid& ag) {
    std::ostringstream os;
    auto edges_json = [&](const std::vector<DualEdge>& edges) {
        os << "[";
        for (size_t i = 0; i < edges.size(); ++i) {
            const DualEdge& e = edges[i];
            if (i) os << ",";
            os << "{\"cross\":" << e.cross << ",\"kind\":" << static_cast<int>(e.kind)
               << ",\"purple\":" << e.purple_id << ",\"u\":" << e.u << ",\"v\":" << e.v << "}";
        }
        os << "]";
    };
    os << "{\"blue_edges\":";
    edges_json(ag.pair.blue_edges);
    os << ",\"e\":" << ag.pair.e();
    os << ",\"gadgets\":[";
    bool first = true;
    for (const auto& [pid, gi] : ag.gadgets) {
        if (!first) os << ",";
        first = false;
        os << "{\"k\":" << gi.gadget.k << ",\"levels\":" << gi.gadget.innermost_level + 1
           << ",\"purple\":" << pid << "}";
    }
    os << "],\"n_b\":" << ag.pair.n_b << ",\"n_r\":" << ag.pair.n_r << ",\"red_edges\":";
    edges_json(ag.pair.red_edges);
    os << ",\"solvable\":" << (ag.verdict.solvable ? "true" : "false") << "}";
    return os.str();
}

}  // namespace gridpaint
