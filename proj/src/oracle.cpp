#include "gridpaint/oracle.hpp"

#include <cassert>
#include <chrono>
#include <unordered_set>

namespace gridpaint {

namespace {

constexpr uint8_t kFree = 3;  // undecided purple subcell

// Backtracking engine over the global subcell grid in row-major order.
// Union-find without path compression plus an undo trail; every component
// tracks how many adjacent unassigned subcells could still join it.
struct Search {
    const ColoredGrid& grid;
    const OracleOptions& opts;
    int R, H, W, NR, NC;

    std::vector<uint8_t> domain;  // kRed/kBlue fixed, kFree choice, kNone white
    std::vector<uint8_t> color;   // assigned color per subcell
    std::vector<int> parent, size, open;
    std::vector<int> order;  // processable subcells, row-major

    // per-color counters
    int comp_cnt[2] = {0, 0};
    int closed_cnt[2] = {0, 0};
    int remaining_fixed[2] = {0, 0};
    int cells_missing[2] = {0, 0};

    // per purple cell bookkeeping
    std::vector<int> cell_remaining;   // unassigned subcells per cell
    std::vector<int> cell_placed[2];   // placed subcells of each color per cell

    struct Undo {
        enum Kind : uint8_t { Union, Open, CompCnt, ClosedCnt, RemFixed, CellsMissing, CellRem, CellPlaced } kind;
        int a, b, c;
    };
    std::vector<Undo> trail;

    uint64_t nodes = 0;
    uint64_t node_budget_check = 0;
    std::chrono::steady_clock::time_point deadline;
    bool use_deadline = false;
    bool timed_out = false;

    // fail memo over canonical row-boundary states: everything below a
    // frontier depends only on the frontier's colors, its connectivity
    // pattern, the closed flags, and the active panels' partial state
    std::unordered_set<std::string> failed;

    explicit Search(const ColoredGrid& g, const OracleOptions& o)
        : grid(g), opts(o), R(o.resolution), H(g.height), W(g.width), NR(H * R), NC(W * R) {
        domain.assign(static_cast<size_t>(NR) * NC, Painting::kNone);
        color.assign(domain.size(), Painting::kNone);
        parent.assign(domain.size(), -1);
        size.assign(domain.size(), 0);
        open.assign(domain.size(), 0);
        cell_remaining.assign(static_cast<size_t>(H) * W, 0);
        cell_placed[0].assign(cell_remaining.size(), 0);
        cell_placed[1].assign(cell_remaining.size(), 0);

        for (int r = 0; r < H; ++r)
            for (int c = 0; c < W; ++c) {
                CellKind k = g.at(r, c);
                if (k == CellKind::White) continue;
                uint8_t d = k == CellKind::Red ? Painting::kRed : k == CellKind::Blue ? Painting::kBlue : kFree;
                for (int i = 0; i < R; ++i)
                    for (int j = 0; j < R; ++j) domain[idx(r * R + i, c * R + j)] = d;
                cell_remaining[r * W + c] = R * R;
                if (k == CellKind::Red) remaining_fixed[0] += R * R;
                if (k == CellKind::Blue) remaining_fixed[1] += R * R;
                if (k == CellKind::Purple) {
                    ++cells_missing[0];
                    ++cells_missing[1];
                }
            }
        for (auto [r, c, i, j, col] : o.fixed) {
            size_t p = idx(r * R + i, c * R + j);
            assert(domain[p] == kFree);
            domain[p] = Painting::value(col);
            // fixed purple subcells guarantee that color will appear
            ++remaining_fixed[Painting::value(col)];
        }
        for (int gr = 0; gr < NR; ++gr)
            for (int gc = 0; gc < NC; ++gc)
                if (domain[idx(gr, gc)] != Painting::kNone) order.push_back(static_cast<int>(idx(gr, gc)));
    }

    size_t idx(int gr, int gc) const { return static_cast<size_t>(gr) * NC + gc; }

    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }

    void push(Undo u) { trail.push_back(u); }

    void set_open(int root, int v) {
        push({Undo::Open, root, open[root], 0});
        open[root] = v;
    }
    void bump_comp(int c, int d) {
        push({Undo::CompCnt, c, comp_cnt[c], 0});
        comp_cnt[c] += d;
    }
    void bump_closed(int c, int d) {
        push({Undo::ClosedCnt, c, closed_cnt[c], 0});
        closed_cnt[c] += d;
    }
    void bump_fixed(int c, int d) {
        push({Undo::RemFixed, c, remaining_fixed[c], 0});
        remaining_fixed[c] += d;
    }
    void bump_missing(int c, int d) {
        push({Undo::CellsMissing, c, cells_missing[c], 0});
        cells_missing[c] += d;
    }

    void rollback(size_t mark) {
        while (trail.size() > mark) {
            Undo u = trail.back();
            trail.pop_back();
            switch (u.kind) {
                case Undo::Union:
                    parent[u.a] = u.a;
                    size[u.b] = u.c;
                    break;
                case Undo::Open: open[u.a] = u.b; break;
                case Undo::CompCnt: comp_cnt[u.a] = u.b; break;
                case Undo::ClosedCnt: closed_cnt[u.a] = u.b; break;
                case Undo::RemFixed: remaining_fixed[u.a] = u.b; break;
                case Undo::CellsMissing: cells_missing[u.a] = u.b; break;
                case Undo::CellRem: cell_remaining[u.a] = u.b; break;
                case Undo::CellPlaced: cell_placed[u.c][u.a] = u.b; break;
            }
        }
    }

    // prune test after any closure event: a sealed component can never rejoin,
    // so any other live or future area of its color is fatal
    bool colors_alive() const {
        for (int c = 0; c < 2; ++c) {
            if (closed_cnt[c] >= 2) return false;
            if (closed_cnt[c] >= 1 &&
                (comp_cnt[c] >= 1 || remaining_fixed[c] > 0 || cells_missing[c] > 0))
                return false;
        }
        return true;
    }

    // neighbors: left/up are processed, right/down not yet
    bool place(int p, uint8_t c) {
        int gr = static_cast<int>(p / NC), gc = static_cast<int>(p % NC);
        color[p] = c;
        parent[p] = p;
        size[p] = 1;

        // openness of the fresh singleton: unassigned right/down neighbors
        // that could still take color c
        int o = 0;
        if (gc + 1 < NC) {
            uint8_t d = domain[p + 1];
            if (d == kFree || d == c) ++o;
        }
        if (gr + 1 < NR) {
            uint8_t d = domain[p + NC];
            if (d == kFree || d == c) ++o;
        }
        open[p] = o;
        push({Undo::Open, p, 0, 0});
        bump_comp(c, 1);

        if (domain[p] != kFree) bump_fixed(c, -1);

        // cell bookkeeping
        int cell = (gr / R) * W + (gc / R);
        push({Undo::CellRem, cell, cell_remaining[cell], 0});
        --cell_remaining[cell];
        if (grid.cells[cell] == CellKind::Purple && cell_placed[c][cell] == 0) bump_missing(c, -1);
        push({Undo::CellPlaced, cell, cell_placed[c][cell], c});
        ++cell_placed[c][cell];
        if (cell_remaining[cell] == 0) {
            if (grid.cells[cell] == CellKind::Purple &&
                (cell_placed[0][cell] == 0 || cell_placed[1][cell] == 0))
                return false;
            if ((opts.max_pieces_per_panel > 0 || opts.forbid_two_by_two) && !panel_ok(gr / R, gc / R))
                return false;
        }

        // consume the contact this subcell offered to processed neighbors
        const int nbr[2] = {gc > 0 ? p - 1 : -1, gr > 0 ? p - NC : -1};
        for (int q : nbr) {
            if (q < 0 || color[q] == Painting::kNone) continue;
            uint8_t qc = color[q];
            if (qc == c) continue;  // same color: handled by the union below
            // q's component counted p while p was unassigned-and-free
            if (domain[p] == kFree || domain[p] == qc) {
                int root = find(q);
                set_open(root, open[root] - 1);
                if (open[root] == 0) {
                    bump_closed(qc, 1);
                    bump_comp(qc, -1);
                    if (!colors_alive()) return false;
                }
            }
        }
        for (int q : nbr) {
            if (q < 0 || color[q] != c) continue;
            int a = find(p), b = find(q);
            if (a == b) {
                // p was already counted once as a contact of this component;
                // consume the duplicate count
                set_open(a, open[a] - 1);
                continue;
            }
            if (size[a] < size[b]) std::swap(a, b);
            push({Undo::Union, b, a, size[a]});
            parent[b] = a;
            size[a] += size[b];
            // merged openness; q's component loses its count of p as contact
            set_open(a, open[a] + open[b] - 1);
            bump_comp(c, -1);
        }
        int root = find(p);
        if (open[root] == 0) {
            bump_closed(c, 1);
            bump_comp(c, -1);
        }
        return colors_alive();
    }

    // Two-sided connectivity prune: every pair of same-color components must
    // still be joinable through unassigned compatible subcells. Runs on a
    // relaxed graph (assigned-c plus free-or-fixed-c unassigned subcells).
    std::vector<uint32_t> reach_mark;
    uint32_t reach_stamp = 0;

    bool reachable_ok() {
        if (reach_mark.size() != domain.size()) reach_mark.assign(domain.size(), 0);
        static thread_local std::vector<int> stack;
        for (uint8_t c : {Painting::kRed, Painting::kBlue}) {
            int start = -1;
            for (size_t q = 0; q < domain.size(); ++q)
                if (color[q] == c) {
                    start = static_cast<int>(q);
                    break;
                }
            if (start < 0) continue;
            ++reach_stamp;
            stack.clear();
            stack.push_back(start);
            reach_mark[start] = reach_stamp;
            while (!stack.empty()) {
                int q = stack.back();
                stack.pop_back();
                int gr = q / NC, gc = q % NC;
                const int nb[4] = {gc > 0 ? q - 1 : -1, gc + 1 < NC ? q + 1 : -1,
                                   gr > 0 ? q - NC : -1, gr + 1 < NR ? q + NC : -1};
                for (int w : nb) {
                    if (w < 0 || reach_mark[w] == reach_stamp) continue;
                    bool pass = (color[w] == c) ||
                                (color[w] == Painting::kNone && (domain[w] == kFree || domain[w] == c));
                    if (!pass) continue;
                    reach_mark[w] = reach_stamp;
                    stack.push_back(w);
                }
            }
            for (size_t q = 0; q < domain.size(); ++q)
                if (color[q] == c && reach_mark[q] != reach_stamp) return false;
            // unprocessed fixed-c subcells must also be reachable
            for (size_t q = 0; q < domain.size(); ++q)
                if (color[q] == Painting::kNone && domain[q] == c && reach_mark[q] != reach_stamp)
                    return false;
        }
        return true;
    }

    // Canonical broken-profile key before assigning position p: the future
    // interacts with the past only through the window of the last NC
    // assigned positions, the connectivity pattern among them, the closed
    // flags, and the active cell row's partial panel state.
    std::string state_key(int p) {
        std::string key;
        key.reserve(3 * NC + 2 * W + 8);
        key.push_back(static_cast<char>(p & 0xff));
        key.push_back(static_cast<char>(p >> 8));
        int canon = 0;
        std::vector<int> rename(NC, -1);
        std::vector<int> roots(NC, -1);
        for (int t = 0; t < NC; ++t) {
            int q = p - NC + t;
            if (color[q] == Painting::kNone) {
                key.push_back('w');
                key.push_back(static_cast<char>(0xff));
                continue;
            }
            key.push_back(color[q] == Painting::kRed ? 'r' : 'b');
            int root = find(q);
            int lab = -1;
            for (int s = 0; s < t; ++s)
                if (roots[s] == root) {
                    lab = rename[s];
                    break;
                }
            if (lab < 0) lab = canon++;
            roots[t] = root;
            rename[t] = lab;
            key.push_back(static_cast<char>(lab));
        }
        key.push_back(static_cast<char>(closed_cnt[0]));
        key.push_back(static_cast<char>(closed_cnt[1]));
        int gr = p / NC;
        int cr = gr / R;
        for (int cc = 0; cc < W; ++cc) {
            int cell = cr * W + cc;
            key.push_back(static_cast<char>((cell_placed[0][cell] > 0) | ((cell_placed[1][cell] > 0) << 1)));
        }
        if (opts.max_pieces_per_panel > 0 || opts.forbid_two_by_two) append_panel_state(key, cr);
        return key;
    }

    // For bounded-complexity searches the key also needs each active panel's
    // committed piece counts and the connectivity among its frontier subcells.
    void append_panel_state(std::string& key, int cr) {
        std::vector<int> comp(static_cast<size_t>(R) * R);
        std::vector<int> stack(static_cast<size_t>(R) * R);
        for (int cc = 0; cc < W; ++cc) {
            if (grid.at(cr, cc) == CellKind::White) {
                key.push_back('w');
                continue;
            }
            int base_r = cr * R, base_c = cc * R;
            std::fill(comp.begin(), comp.end(), -1);
            int ncomp = 0;
            int committed[2] = {0, 0};
            for (int i = 0; i < R; ++i)
                for (int j = 0; j < R; ++j) {
                    int t = i * R + j;
                    if (comp[t] != -1) continue;
                    uint8_t v = color[idx(base_r + i, base_c + j)];
                    if (v == Painting::kNone) continue;
                    int sp = 0;
                    stack[sp++] = t;
                    comp[t] = ncomp;
                    bool open_below = false;
                    while (sp) {
                        int u = stack[--sp];
                        int ui = u / R, uj = u % R;
                        constexpr int di[4] = {-1, 0, 1, 0}, dj[4] = {0, 1, 0, -1};
                        for (int d = 0; d < 4; ++d) {
                            int ni = ui + di[d], nj = uj + dj[d];
                            if (ni < 0 || ni >= R || nj < 0 || nj >= R) continue;
                            int w = ni * R + nj;
                            if (comp[w] != -1) continue;
                            uint8_t wv = color[idx(base_r + ni, base_c + nj)];
                            if (wv == Painting::kNone) {
                                open_below = true;
                                continue;
                            }
                            if (wv != v) continue;
                            comp[w] = ncomp;
                            stack[sp++] = w;
                        }
                    }
                    if (!open_below) ++committed[v];
                    ++ncomp;
                }
            key.push_back(static_cast<char>(committed[0]));
            key.push_back(static_cast<char>(committed[1]));
            // frontier labels: assigned subcells adjacent to unassigned ones
            for (int i = 0; i < R; ++i)
                for (int j = 0; j < R; ++j) {
                    int t = i * R + j;
                    bool frontier = comp[t] != -1 &&
                                    ((i + 1 < R && color[idx(base_r + i + 1, base_c + j)] == Painting::kNone) ||
                                     (j + 1 < R && color[idx(base_r + i, base_c + j + 1)] == Painting::kNone) ||
                                     (j > 0 && color[idx(base_r + i, base_c + j - 1)] == Painting::kNone));
                    key.push_back(static_cast<char>(frontier ? comp[t] : 0x7f));
                }
        }
    }

    bool panel_ok(int cr, int cc) {
        // count pieces of the completed panel with a scratch flood fill
        static thread_local std::vector<int> mark;
        mark.assign(static_cast<size_t>(R) * R, 0);
        int pieces[2] = {0, 0};
        std::vector<int> stack;
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < R; ++j) {
                if (mark[i * R + j]) continue;
                uint8_t v = color[idx(cr * R + i, cc * R + j)];
                if (v == Painting::kNone) continue;
                ++pieces[v];
                mark[i * R + j] = 1;
                stack.push_back(i * R + j);
                while (!stack.empty()) {
                    int t = stack.back();
                    stack.pop_back();
                    int ti = t / R, tj = t % R;
                    constexpr int di[4] = {-1, 0, 1, 0}, dj[4] = {0, 1, 0, -1};
                    for (int d = 0; d < 4; ++d) {
                        int ni = ti + di[d], nj = tj + dj[d];
                        if (ni < 0 || ni >= R || nj < 0 || nj >= R || mark[ni * R + nj]) continue;
                        if (color[idx(cr * R + ni, cc * R + nj)] != v) continue;
                        mark[ni * R + nj] = 1;
                        stack.push_back(ni * R + nj);
                    }
                }
            }
        if (opts.max_pieces_per_panel > 0 && pieces[0] + pieces[1] > opts.max_pieces_per_panel) return false;
        if (opts.forbid_two_by_two && pieces[0] >= 2 && pieces[1] >= 2) return false;
        return true;
    }

    bool solve(size_t depth) {
        if (timed_out) return false;
        if (++node_budget_check >= 4096) {
            node_budget_check = 0;
            if (use_deadline && std::chrono::steady_clock::now() > deadline) {
                timed_out = true;
                return false;
            }
        }
        if (depth == order.size()) {
            // all placed; every color must form at most one component
            for (int c = 0; c < 2; ++c)
                if (comp_cnt[c] + closed_cnt[c] > 1) return false;
            return true;
        }
        ++nodes;
        int p = order[depth];
        int gr = static_cast<int>(p / NC), gc = static_cast<int>(p % NC);
        int cell = (gr / R) * W + (gc / R);

        bool do_memo = p >= NC;
        std::string key;
        if (do_memo) {
            key = state_key(p);
            if (failed.count(key)) return false;
        }

        uint8_t choices[2];
        int nchoices = 0;
        if (domain[p] != kFree) {
            choices[nchoices++] = domain[p];
        } else {
            // presence force: the last free subcell of a purple cell takes a
            // missing color
            if (cell_remaining[cell] == 1 && grid.cells[cell] == CellKind::Purple) {
                bool miss_r = cell_placed[0][cell] == 0, miss_b = cell_placed[1][cell] == 0;
                if (miss_r && miss_b) return false;
                if (miss_r) choices[nchoices++] = Painting::kRed;
                else if (miss_b) choices[nchoices++] = Painting::kBlue;
            }
            if (nchoices == 0) {
                // prefer the color of the left (then up) neighbor
                uint8_t first = Painting::kRed;
                if (gc > 0 && color[p - 1] != Painting::kNone) first = color[p - 1];
                else if (gr > 0 && color[p - NC] != Painting::kNone) first = color[p - NC];
                choices[nchoices++] = first;
                choices[nchoices++] = static_cast<uint8_t>(1 - first);
            }
        }

        bool row_done = depth + 1 == order.size() || order[depth + 1] / NC > gr;
        for (int t = 0; t < nchoices; ++t) {
            size_t mark = trail.size();
            if (place(p, choices[t]) && (!row_done || reachable_ok()) && solve(depth + 1)) return true;
            rollback(mark);
            color[p] = Painting::kNone;
            parent[p] = -1;
            if (timed_out) return false;
        }
        if (do_memo && !timed_out && failed.size() < (1u << 22)) failed.insert(std::move(key));
        return false;
    }
};

}  // namespace

OracleResult oracle_admits(const ColoredGrid& grid, const OracleOptions& opts) {
    assert(opts.resolution >= 2);
    OracleResult res;
    Search s(grid, opts);
    if (opts.timeout_seconds > 0) {
        s.use_deadline = true;
        s.deadline = std::chrono::steady_clock::now() +
                     std::chrono::microseconds(static_cast<int64_t>(opts.timeout_seconds * 1e6));
    }
    bool found = s.solve(0);
    res.nodes = s.nodes;
    if (s.timed_out) {
        res.status = OracleStatus::Timeout;
        return res;
    }
    if (!found) {
        res.status = OracleStatus::False;
        return res;
    }
    res.status = OracleStatus::True;
    res.witness = Painting::blank(grid.height, grid.width, opts.resolution);
    for (int gr = 0; gr < s.NR; ++gr)
        for (int gc = 0; gc < s.NC; ++gc) res.witness.at(gr, gc) = s.color[s.idx(gr, gc)];
    res.witness_valid = true;
    return res;
}

}  // namespace gridpaint
