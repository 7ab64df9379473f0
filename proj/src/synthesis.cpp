#include "gridpaint/synthesis.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <queue>
#include <set>

#include "gridpaint/verifier.hpp"

namespace gridpaint {

// ════════════════════════════════════════════════════════════════════
//  Cotree pairing
// ════════════════════════════════════════════════════════════════════

CotreePair cotree_pair(const AnalyzedGrid& ag) {
    if (!ag.verdict.solvable) throw NotSolvable();
    const DualPair& dp = ag.pair;
    CotreePair out;

    // BFS spanning tree of G_r from the lowest vertex id, edges by id
    if (dp.n_r > 0) {
        std::vector<std::vector<std::pair<int, int>>> adj(dp.n_r);  // (edge id, other)
        for (int i = 0; i < static_cast<int>(dp.red_edges.size()); ++i) {
            adj[dp.red_edges[i].u].push_back({i, dp.red_edges[i].v});
            adj[dp.red_edges[i].v].push_back({i, dp.red_edges[i].u});
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        std::vector<char> seen(dp.n_r, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [eid, w] : adj[v]) {
                if (seen[w]) continue;
                seen[w] = 1;
                out.red_tree.push_back(eid);
                q.push(w);
            }
        }
        std::sort(out.red_tree.begin(), out.red_tree.end());
        if (static_cast<int>(out.red_tree.size()) != dp.n_r - 1)
            throw std::logic_error("G_r is not connected despite a solvable verdict");
    }

    std::vector<char> in_red(dp.red_edges.size(), 0);
    for (int eid : out.red_tree) in_red[eid] = 1;
    for (int i = 0; i < static_cast<int>(dp.blue_edges.size()); ++i)
        if (!in_red[dp.blue_edges[i].cross]) out.blue_tree.push_back(i);

    // postcondition: the complement crossing set spans G_b
    if (dp.n_b > 0) {
        if (static_cast<int>(out.blue_tree.size()) != dp.n_b - 1)
            throw std::logic_error("cotree complement has the wrong edge count");
        std::vector<int> parent(dp.n_b);
        for (int i = 0; i < dp.n_b; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int comps = dp.n_b;
        for (int eid : out.blue_tree) {
            int a = find(dp.blue_edges[eid].u), b = find(dp.blue_edges[eid].v);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
        if (comps != 1) throw std::logic_error("cotree complement does not span G_b");
    }
    return out;
}

// ════════════════════════════════════════════════════════════════════
//  Connection planning
// ════════════════════════════════════════════════════════════════════

namespace {

// positions strictly between a and b going forward on a ring of size n
std::vector<int> ring_between(int a, int b, int n) {
    std::vector<int> out;
    for (int s = (a + 1) % n; s != b; s = (s + 1) % n) out.push_back(s);
    return out;
}

bool chords_interleave(int a1, int b1, int a2, int b2, int n) {
    if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return false;  // shared entry fans out
    auto inside = [&](int x) {
        int da = ((b1 - a1) % n + n) % n;
        int dx = ((x - a1) % n + n) % n;
        return dx > 0 && dx < da;
    };
    return inside(a2) != inside(b2);
}

}  // namespace

ConnectionPlan plan_connections(const AnalyzedGrid& ag, const CotreePair& trees) {
    ConnectionPlan plan;
    int max_kappa = 0;

    std::vector<char> red_sel(ag.pair.red_edges.size(), 0), blue_sel(ag.pair.blue_edges.size(), 0);
    for (int eid : trees.red_tree) red_sel[eid] = 1;
    for (int eid : trees.blue_tree) blue_sel[eid] = 1;

    for (const MergedProfile& mp : ag.profiles) {
        RegionPlan rp;
        rp.purple_id = mp.purple_id;
        std::vector<int> pos = mp.colored_positions();
        int kappa = static_cast<int>(pos.size());
        max_kappa = std::max(max_kappa, kappa);

        for (const BoundaryConnection& bc : ag.connections)
            if (bc.purple_id == mp.purple_id) {
                PlannedStrip s;
                s.color = bc.color;
                s.kind = StripKind::Hug;
                s.port_a = bc.port_a;
                s.port_b = bc.port_b;
                s.arc = bc.arc;
                rp.strips.push_back(std::move(s));
            }
        for (const HoleCut& cut : ag.cuts)
            if (cut.purple_id == mp.purple_id)
                for (const auto& cor : cut.corridors) {
                    PlannedStrip s;
                    s.color = cor.color;
                    s.kind = StripKind::Corridor;
                    s.port_a = cor.inner;
                    s.port_b = cor.outer;
                    rp.strips.push_back(std::move(s));
                }

        auto add_chord = [&](Color c, int occ_a, int occ_b) {
            PlannedStrip s;
            s.color = c;
            s.kind = StripKind::Chord;
            s.occ_a = occ_a;
            s.occ_b = occ_b;
            s.port_a = mp.cycle[pos[occ_a]].contact;
            s.port_b = mp.cycle[pos[occ_b]].contact;
            // pick the side with the smaller span; ties go forward from the
            // smaller occurrence
            auto fwd = ring_between(occ_a, occ_b, kappa);
            auto bwd = ring_between(occ_b, occ_a, kappa);
            if (bwd.size() < fwd.size()) {
                std::swap(s.occ_a, s.occ_b);
                std::swap(s.port_a, s.port_b);
                s.span = std::move(bwd);
            } else {
                s.span = std::move(fwd);
            }
            rp.strips.push_back(std::move(s));
        };

        if (kappa == 4) {
            // exactly one side of the crossing pair was chosen by the trees
            for (int i = 0; i < static_cast<int>(ag.pair.red_edges.size()); ++i) {
                const DualEdge& e = ag.pair.red_edges[i];
                if (e.purple_id != mp.purple_id || e.kind != EdgeKind::K4Chord) continue;
                bool red_in = red_sel[i];
                bool blue_in = blue_sel[e.cross];
                assert(red_in != blue_in);
                if (red_in) add_chord(Color::Red, e.occ_u, e.occ_v);
                else add_chord(Color::Blue, ag.pair.blue_edges[e.cross].occ_u, ag.pair.blue_edges[e.cross].occ_v);
            }
        } else if (kappa > 4) {
            const GadgetInstance& gi = ag.gadgets.at(mp.purple_id);
            // selected gadget edges of each color, as gadget edge ids
            std::vector<int> chosen_r, chosen_b;
            for (int i = 0; i < static_cast<int>(ag.pair.red_edges.size()); ++i)
                if (red_sel[i] && ag.pair.red_edges[i].purple_id == mp.purple_id &&
                    ag.pair.red_edges[i].gadget_edge >= 0)
                    chosen_r.push_back(ag.pair.red_edges[i].gadget_edge);
            for (int i = 0; i < static_cast<int>(ag.pair.blue_edges.size()); ++i)
                if (blue_sel[i] && ag.pair.blue_edges[i].purple_id == mp.purple_id &&
                    ag.pair.blue_edges[i].gadget_edge >= 0)
                    chosen_b.push_back(ag.pair.blue_edges[i].gadget_edge);
            rp.gadget_red_edges = chosen_r;
            rp.gadget_blue_edges = chosen_b;

            // component structure of the chosen edges inside the gadget;
            // components translate to chains over their boundary occurrences
            auto chains_for = [&](const std::vector<int>& chosen, Color c) {
                const SpiderwebGadget& g = gi.gadget;
                std::vector<int> parent(g.vertices.size());
                for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
                auto find = [&](int x) {
                    while (parent[x] != x) x = parent[x] = parent[parent[x]];
                    return x;
                };
                for (int ge : chosen) {
                    int a = find(g.edges[ge].u), b = find(g.edges[ge].v);
                    if (a != b) parent[a] = b;
                }
                std::map<int, std::vector<int>> groups;  // root -> occurrence list
                for (int vi = 0; vi < static_cast<int>(g.vertices.size()); ++vi) {
                    if (g.vertices[vi].level > 1 || g.color_of(vi) != c) continue;
                    // only vertices incident to a chosen edge need connecting
                    bool used = false;
                    for (int ge : chosen)
                        used |= g.edges[ge].u == vi || g.edges[ge].v == vi;
                    if (!used) continue;
                    groups[find(vi)].push_back(gi.label_to_occ[g.vertices[vi].label]);
                }
                for (auto& [root, occs] : groups) {
                    std::sort(occs.begin(), occs.end());
                    for (size_t i = 0; i + 1 < occs.size(); ++i) add_chord(c, occs[i], occs[i + 1]);
                }
            };
            chains_for(chosen_r, Color::Red);
            chains_for(chosen_b, Color::Blue);
        }

        // planned chords of opposite colors must never interleave
        for (size_t i = 0; i < rp.strips.size(); ++i)
            for (size_t j = i + 1; j < rp.strips.size(); ++j) {
                const PlannedStrip& s1 = rp.strips[i];
                const PlannedStrip& s2 = rp.strips[j];
                if (s1.kind != StripKind::Chord || s2.kind != StripKind::Chord) continue;
                if (chords_interleave(s1.occ_a, s1.occ_b, s2.occ_a, s2.occ_b, kappa))
                    throw std::logic_error("planned connections interleave");
            }
        plan.regions.push_back(std::move(rp));
    }
    plan.r_min = std::max(3, 2 * max_kappa + 1);
    return plan;
}

// ════════════════════════════════════════════════════════════════════
//  Rasterization
// ════════════════════════════════════════════════════════════════════

namespace {

// Routing scratch for one purple region at one resolution.
struct Router {
    const AnalyzedGrid& ag;
    const Region& region;
    const MergedProfile& profile;
    Painting& paint;
    const int R, NC, NR;

    std::vector<char> in_region;      // per subcell
    std::vector<int> port_owner;      // -1 free-for-all, else colored occurrence position
    std::vector<int> port_owner2;     // second owner at corners
    std::vector<int> scratch;         // BFS parents
    std::vector<int> qbuf;

    Router(const AnalyzedGrid& a, const Region& reg, const MergedProfile& mp, Painting& p)
        : ag(a), region(reg), profile(mp), paint(p), R(p.resolution), NC(p.cols()), NR(p.rows()) {
        in_region.assign(static_cast<size_t>(NR) * NC, 0);
        port_owner.assign(in_region.size(), -1);
        port_owner2.assign(in_region.size(), -1);
        for (auto [r, c] : region.cells)
            for (int i = 0; i < R; ++i)
                for (int j = 0; j < R; ++j) in_region[idx(r * R + i, c * R + j)] = 1;

        std::vector<int> pos = mp.colored_positions();
        for (int t = 0; t < static_cast<int>(pos.size()); ++t)
            for (const BoundaryEdge& e : mp.cycle[pos[t]].contact)
                for (int s : flank(e)) {
                    if (port_owner[s] == -1) port_owner[s] = t;
                    else if (port_owner[s] != t) port_owner2[s] = t;
                }
    }

    size_t idx(int gr, int gc) const { return static_cast<size_t>(gr) * NC + gc; }

    // inner flank subcells of a boundary edge, in walk order
    std::vector<int> flank(const BoundaryEdge& e) const {
        std::vector<int> out;
        out.reserve(R);
        for (int t = 0; t < R; ++t) {
            int gr, gc;
            switch (e.side) {
                case 0: gr = e.row * R, gc = e.col * R + t; break;
                case 1: gr = e.row * R + t, gc = e.col * R + R - 1; break;
                case 2: gr = e.row * R + R - 1, gc = e.col * R + (R - 1 - t); break;
                default: gr = e.row * R + (R - 1 - t), gc = e.col * R; break;
            }
            out.push_back(static_cast<int>(idx(gr, gc)));
        }
        return out;
    }

    std::vector<int> flanks(const std::vector<BoundaryEdge>& edges) const {
        std::vector<int> out;
        for (const auto& e : edges) {
            auto f = flank(e);
            out.insert(out.end(), f.begin(), f.end());
        }
        return out;
    }

    bool free_at(int s) const { return in_region[s] && paint.sub[s] == Painting::kNone; }

    // shortest path through free subcells from any source to any target;
    // `allowed` limits which subcells may be entered (nullptr = no limit
    // beyond the port discipline for `occs`)
    std::vector<int> route(const std::vector<int>& sources, const std::vector<int>& targets,
                           const std::vector<int>& occs, const std::vector<char>* band = nullptr) {
        std::vector<char> target_set(in_region.size(), 0);
        bool any_target = false;
        for (int t : targets)
            if (free_at(t) && admissible(t, occs, band)) {
                target_set[t] = 1;
                any_target = true;
            }
        if (!any_target) return {};
        scratch.assign(in_region.size(), -2);
        std::deque<int> q;
        for (int s : sources)
            if (free_at(s) && admissible(s, occs, band) && scratch[s] == -2) {
                scratch[s] = -1;
                if (target_set[s]) return {s};
                q.push_back(s);
            }
        while (!q.empty()) {
            int s = q.front();
            q.pop_front();
            int gr = s / NC, gc = s % NC;
            const int nb[4] = {gr > 0 ? s - NC : -1, gc + 1 < NC ? s + 1 : -1,
                               gr + 1 < NR ? s + NC : -1, gc > 0 ? s - 1 : -1};
            for (int w : nb) {
                if (w < 0 || scratch[w] != -2 || !free_at(w) || !admissible(w, occs, band)) continue;
                scratch[w] = s;
                if (target_set[w]) {
                    std::vector<int> path;
                    for (int x = w; x != -1; x = scratch[x]) path.push_back(x);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                q.push_back(w);
            }
        }
        return {};
    }

    // boundary-flank subcells are reserved for strips that end at their
    // interval; interior subcells are open to everyone
    bool admissible(int s, const std::vector<int>& occs, const std::vector<char>* band) const {
        if (band && !(*band)[s]) return false;
        int o1 = port_owner[s], o2 = port_owner2[s];
        if (o1 == -1) return true;
        for (int o : occs)
            if (o == o1 || o == o2) return true;
        return false;
    }

    void commit(const std::vector<int>& path, Color c) {
        for (int s : path) paint.sub[s] = Painting::value(c);
    }
};

// occurrences whose entry contains any of the given contact edges
std::vector<int> owning_occs(const MergedProfile& mp, const std::vector<BoundaryEdge>& edges_a,
                             const std::vector<BoundaryEdge>& edges_b) {
    std::vector<int> pos = mp.colored_positions();
    std::set<std::tuple<int, int, int>> want;
    for (const auto& e : edges_a) want.insert({e.row, e.col, e.side});
    for (const auto& e : edges_b) want.insert({e.row, e.col, e.side});
    std::vector<int> out;
    for (int t = 0; t < static_cast<int>(pos.size()); ++t)
        for (const BoundaryEdge& e : mp.cycle[pos[t]].contact)
            if (want.count({e.row, e.col, e.side})) {
                out.push_back(t);
                break;
            }
    return out;
}

}  // namespace

Painting rasterize(const ConnectionPlan& plan, const AnalyzedGrid& ag, int R, RasterTrace* trace) {
    const ColoredGrid& grid = ag.map.grid;
    Painting paint = Painting::blank(grid.height, grid.width, R);

    // fixed cells first
    for (int r = 0; r < grid.height; ++r)
        for (int c = 0; c < grid.width; ++c) {
            CellKind k = grid.at(r, c);
            if (k != CellKind::Red && k != CellKind::Blue) continue;
            uint8_t v = k == CellKind::Red ? Painting::kRed : Painting::kBlue;
            for (int i = 0; i < R; ++i)
                for (int j = 0; j < R; ++j) paint.cell_at(r, c, i, j) = v;
        }

    for (const RegionPlan& rp : plan.regions) {
        const Region& region = ag.map.regions[rp.purple_id];
        const MergedProfile& mp = ag.profile_of(rp.purple_id);
        Router router(ag, region, mp, paint);

        // ── strips: hugs, corridors, then chords innermost first ──
        std::vector<int> order(rp.strips.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            const PlannedStrip& sa = rp.strips[a];
            const PlannedStrip& sb = rp.strips[b];
            if (sa.kind != sb.kind) return static_cast<int>(sa.kind) < static_cast<int>(sb.kind);
            if (sa.kind == StripKind::Chord) return sa.span.size() < sb.span.size();
            return false;
        });

        std::vector<int> last_corridor_path;
        for (int si : order) {
            const PlannedStrip& s = rp.strips[si];
            std::vector<int> sources = router.flanks(s.port_a);
            std::vector<int> targets = router.flanks(s.port_b);
            std::vector<int> occs = owning_occs(mp, s.port_a, s.port_b);
            std::vector<int> path;
            if (s.kind == StripKind::Hug) {
                // hug the boundary: first try the exact flank band (which can
                // never seal off interior pockets), then widen one layer for
                // reflex corners, then give up the band (virtual arcs)
                std::vector<char> tight(router.in_region.size(), 0);
                for (int sub : sources) tight[sub] = 1;
                for (int sub : targets) tight[sub] = 1;
                for (const BoundaryEdge& e : s.arc)
                    for (int sub : router.flank(e)) tight[sub] = 1;
                path = router.route(sources, targets, occs, &tight);
                if (path.empty()) {
                    std::vector<char> band(router.in_region.size(), 0);
                    auto widen = [&](int sub) {
                        band[sub] = 1;
                        int gr = sub / router.NC, gc = sub % router.NC;
                        const int nb[4] = {gr > 0 ? sub - router.NC : -1, gc + 1 < router.NC ? sub + 1 : -1,
                                           gr + 1 < router.NR ? sub + router.NC : -1, gc > 0 ? sub - 1 : -1};
                        for (int w : nb)
                            if (w >= 0 && router.in_region[w]) band[w] = 1;
                    };
                    for (size_t t = 0; t < tight.size(); ++t)
                        if (tight[t]) widen(static_cast<int>(t));
                    path = router.route(sources, targets, occs, &band);
                }
                if (path.empty()) path = router.route(sources, targets, occs);  // virtual arcs
            } else if (s.kind == StripKind::Corridor && s.color == Color::Blue &&
                       !last_corridor_path.empty()) {
                // keep the blue corridor on the same side as its red partner
                std::vector<char> band(router.in_region.size(), 0);
                int radius = std::max(2, R / 2);
                for (int sub : last_corridor_path) {
                    int gr = sub / router.NC, gc = sub % router.NC;
                    for (int dr = -radius; dr <= radius; ++dr)
                        for (int dc = -radius; dc <= radius; ++dc) {
                            int nr = gr + dr, nc = gc + dc;
                            if (nr < 0 || nr >= router.NR || nc < 0 || nc >= router.NC) continue;
                            size_t w = router.idx(nr, nc);
                            if (router.in_region[w]) band[w] = 1;
                        }
                }
                for (int sub : sources) band[sub] = 1;
                for (int sub : targets) band[sub] = 1;
                path = router.route(sources, targets, occs, &band);
            } else {
                path = router.route(sources, targets, occs);
            }
            if (path.empty())
                throw ResolutionTooLow("cannot route strip in region " + std::to_string(rp.purple_id));
            router.commit(path, s.color);
            if (s.kind == StripKind::Corridor && s.color == Color::Red) last_corridor_path = path;
            if (trace) trace->strips.push_back({rp.purple_id, s.color, s.kind, path});
        }

        // ── presence: every cell needs both colors attached to their
        //    polygons; blue first, then red, then flood ──
        std::vector<int> pos = mp.colored_positions();
        for (Color c : {Color::Blue, Color::Red}) {
            uint8_t v = Painting::value(c);
            // attachment sources: committed subcells of this color plus free
            // flanks of this color's intervals
            auto sources_of = [&]() {
                std::vector<int> src;
                for (auto [r, cc] : region.cells)
                    for (int i = 0; i < R; ++i)
                        for (int j = 0; j < R; ++j) {
                            int s = static_cast<int>(router.idx(r * R + i, cc * R + j));
                            if (paint.sub[s] == v) src.push_back(s);
                        }
                return src;
            };
            std::vector<int> port_flanks;
            for (int t = 0; t < static_cast<int>(pos.size()); ++t)
                if (mp.cycle[pos[t]].color == c) {
                    auto f = router.flanks(mp.cycle[pos[t]].contact);
                    port_flanks.insert(port_flanks.end(), f.begin(), f.end());
                }

            std::vector<int> attached = sources_of();
            if (attached.empty() && port_flanks.empty()) {
                // enclosed color: seed the free component that reaches the
                // most cells of the region (lowest subcell on ties)
                std::vector<int> comp(router.in_region.size(), -1);
                std::vector<std::pair<int, int>> best;  // (-cells covered, seed)
                int ncomp = 0;
                for (auto [r, cc] : region.cells)
                    for (int i = 0; i < R; ++i)
                        for (int j = 0; j < R; ++j) {
                            int s0 = static_cast<int>(router.idx(r * R + i, cc * R + j));
                            if (!router.free_at(s0) || router.port_owner[s0] != -1 || comp[s0] != -1)
                                continue;
                            std::set<std::pair<int, int>> cells;
                            std::deque<int> q{s0};
                            comp[s0] = ncomp;
                            while (!q.empty()) {
                                int s = q.front();
                                q.pop_front();
                                cells.insert({s / router.NC / R, s % router.NC / R});
                                int gr = s / router.NC, gc = s % router.NC;
                                const int nb[4] = {gr > 0 ? s - router.NC : -1,
                                                   gc + 1 < router.NC ? s + 1 : -1,
                                                   gr + 1 < router.NR ? s + router.NC : -1,
                                                   gc > 0 ? s - 1 : -1};
                                for (int w : nb) {
                                    if (w < 0 || comp[w] != -1 || !router.free_at(w) ||
                                        router.port_owner[w] != -1)
                                        continue;
                                    comp[w] = ncomp;
                                    q.push_back(w);
                                }
                            }
                            best.push_back({-static_cast<int>(cells.size()), s0});
                            ++ncomp;
                        }
                if (best.empty()) throw ResolutionTooLow("no room for enclosed color seed");
                std::sort(best.begin(), best.end());
                int seed = best.front().second;
                paint.sub[seed] = v;
                attached.push_back(seed);
            }

            for (auto [r, cc] : region.cells) {
                bool has = false;
                for (int i = 0; i < R && !has; ++i)
                    for (int j = 0; j < R && !has; ++j)
                        has = paint.cell_at(r, cc, i, j) == v;
                if (has) continue;
                // claim a shortest free path from the attachment structure
                // into this cell; free flanks of own-color ports count as
                // pre-attached entry points
                std::vector<int> srcs = attached;
                for (int s : port_flanks)
                    if (router.free_at(s)) srcs.push_back(s);
                std::vector<int> cell_targets;
                for (int i = 0; i < R; ++i)
                    for (int j = 0; j < R; ++j) {
                        int s = static_cast<int>(router.idx(r * R + i, cc * R + j));
                        if (router.free_at(s)) cell_targets.push_back(s);
                    }
                // route within free space; for sources choose adjacency to
                // attached: route() needs free sources, so expand from free
                // neighbors of attached subcells
                std::vector<int> free_sources;
                for (int s : srcs) {
                    if (router.free_at(s)) {
                        free_sources.push_back(s);
                        continue;
                    }
                    int gr = s / router.NC, gc = s % router.NC;
                    const int nb[4] = {gr > 0 ? s - router.NC : -1, gc + 1 < router.NC ? s + 1 : -1,
                                       gr + 1 < router.NR ? s + router.NC : -1, gc > 0 ? s - 1 : -1};
                    for (int w : nb)
                        if (w >= 0 && router.free_at(w)) free_sources.push_back(w);
                }
                std::vector<int> own_occs;
                for (int t = 0; t < static_cast<int>(pos.size()); ++t)
                    if (mp.cycle[pos[t]].color == c) own_occs.push_back(t);
                std::vector<int> path = router.route(free_sources, cell_targets, own_occs);
                if (path.empty()) {
                    if (getenv("GRIDPAINT_DEBUG_RASTER")) {
                        fprintf(stderr, "presence failure: cell (%d,%d) color %c; sources=%zu targets=%zu\n",
                                r, cc, color_char(c), free_sources.size(), cell_targets.size());
                        for (int gr = 0; gr < paint.rows(); ++gr) {
                            for (int gc = 0; gc < paint.cols(); ++gc) {
                                uint8_t v = paint.at(gr, gc);
                                char ch = v == Painting::kRed ? 'r' : v == Painting::kBlue ? 'b' : '.';
                                if (v == Painting::kNone && router.in_region[router.idx(gr, gc)])
                                    ch = router.port_owner[router.idx(gr, gc)] >= 0 ? 'o' : '_';
                                fputc(ch, stderr);
                            }
                            fputc('\n', stderr);
                        }
                    }
                    throw ResolutionTooLow("cannot give cell (" + std::to_string(r) + "," +
                                           std::to_string(cc) + ") color " + color_char(c));
                }
                router.commit(path, c);
                attached.insert(attached.end(), path.begin(), path.end());
            }
        }

        // ── flood the rest from colored neighbors, breadth first ──
        {
            std::deque<int> q;
            for (auto [r, cc] : region.cells)
                for (int i = 0; i < R; ++i)
                    for (int j = 0; j < R; ++j) {
                        int s = static_cast<int>(router.idx(r * R + i, cc * R + j));
                        if (paint.sub[s] != Painting::kNone) q.push_back(s);
                    }
            while (!q.empty()) {
                int s = q.front();
                q.pop_front();
                uint8_t v = paint.sub[s];
                int gr = s / router.NC, gc = s % router.NC;
                const int nb[4] = {gr > 0 ? s - router.NC : -1, gc + 1 < router.NC ? s + 1 : -1,
                                   gr + 1 < router.NR ? s + router.NC : -1, gc > 0 ? s - 1 : -1};
                for (int w : nb) {
                    if (w < 0 || !router.free_at(w)) continue;
                    paint.sub[w] = v;
                    q.push_back(w);
                }
            }
        }
    }

    ValidationReport rep = validate_painting(grid, paint);
    if (!rep.ok) {
        std::string why = "rasterization failed validation";
        if (!rep.violations.empty())
            why += ": " + rep.violations[0].kind + " at (" + std::to_string(rep.violations[0].row) +
                   "," + std::to_string(rep.violations[0].col) + ")";
        throw ResolutionTooLow(why);
    }
    return paint;
}

PaintResult paint_grid(const ColoredGrid& grid, std::optional<int> resolution) {
    AnalyzedGrid ag = analyze(grid);
    if (!ag.verdict.solvable) throw NotSolvable();
    PaintResult out;
    out.trees = cotree_pair(ag);
    out.plan = plan_connections(ag, out.trees);
    int R = resolution.value_or(out.plan.r_min);
    R = std::max(R, 2);
    for (int attempt = 1;; ++attempt) {
        try {
            out.painting = rasterize(out.plan, ag, R);
            out.attempts = attempt;
            return out;
        } catch (const ResolutionTooLow&) {
            if (R > 1024) throw;
            R *= 2;
        }
    }
}

}  // namespace gridpaint
