#include <set>

#include "doctest.h"
#include "gridpaint/solvability.hpp"

using namespace gridpaint;

namespace {

int count_vertices(const SpiderwebGadget& g, Color c) {
    int n = 0;
    for (const auto& v : g.vertices) n += v.color == c;
    return n;
}

int count_edges(const SpiderwebGadget& g, Color c) {
    int n = 0;
    for (const auto& e : g.edges) n += e.color == c;
    return n;
}

// Two demands interleave if exactly one endpoint of the second lies strictly
// inside the clockwise arc of the first.
bool interleaved(int a1, int a2, int b1, int b2, int mod) {
    auto inside = [&](int x) {
        int da = ((a2 - a1) % mod + mod) % mod;
        int dx = ((x - a1) % mod + mod) % mod;
        return dx > 0 && dx < da;
    };
    return inside(b1) != inside(b2);
}

}  // namespace

TEST_CASE("spiderweb rejects k < 3") {
    CHECK_THROWS_AS(build_spiderweb(2), InvalidK);
    CHECK_THROWS_AS(build_spiderweb(0), InvalidK);
}

TEST_CASE("spiderweb k=6 matches the layered layout") {
    SpiderwebGadget g = build_spiderweb(6);
    // blue levels 0, 2, 4; red levels 1, 3; innermost single blue vertex
    CHECK(g.innermost_level == 4);
    std::set<int> blue_levels, red_levels;
    for (const auto& v : g.vertices)
        (v.color == Color::Blue ? blue_levels : red_levels).insert(v.level);
    CHECK(blue_levels == std::set<int>{0, 2, 4});
    CHECK(red_levels == std::set<int>{1, 3});
    CHECK(count_vertices(g, Color::Red) == 12);
    CHECK(count_vertices(g, Color::Blue) == 13);
    CHECK(count_edges(g, Color::Red) == 18);
    CHECK(count_edges(g, Color::Blue) == 18);
    CHECK(g.crossings.size() == 18);
    CHECK(g.vertices[g.innermost_vertex()].color == Color::Blue);
}

TEST_CASE("spiderweb k=3 smallest case") {
    SpiderwebGadget g = build_spiderweb(3);
    CHECK(g.innermost_level == 2);
    int level0 = 0, level1 = 0;
    for (const auto& v : g.vertices) {
        level0 += v.level == 0;
        level1 += v.level == 1;
    }
    CHECK(level0 == 3);
    CHECK(level1 == 3);
    // innermost blue vertex joined to all of level 0
    int inner = g.innermost_vertex();
    int fan = 0;
    for (const auto& e : g.edges)
        if (e.kind == 2) {
            CHECK((e.u == inner || e.v == inner));
            int leaf = e.u == inner ? e.v : e.u;
            CHECK(g.level_of(leaf) == 0);
            ++fan;
        }
    CHECK(fan == 3);
    // level 0 carries no cycle edges
    for (const auto& e : g.edges)
        if (e.kind == 0) CHECK(e.level >= 1);
}

TEST_CASE("spiderweb invariants for k = 3..8") {
    for (int k = 3; k <= 8; ++k) {
        CAPTURE(k);
        SpiderwebGadget g = build_spiderweb(k);
        int level0 = 0;
        for (const auto& v : g.vertices) level0 += v.level == 0;
        CHECK(level0 == k);
        int innermost = 0;
        for (const auto& v : g.vertices) innermost += v.level == g.innermost_level;
        CHECK(innermost == 1);
        CHECK(count_edges(g, Color::Red) == count_edges(g, Color::Blue));
        // crossing bijection complete: every edge in exactly one pair
        std::set<int> reds, blues;
        for (auto [r, b] : g.crossings) {
            CHECK(g.edges[r].color == Color::Red);
            CHECK(g.edges[b].color == Color::Blue);
            CHECK(reds.insert(r).second);
            CHECK(blues.insert(b).second);
        }
        CHECK(static_cast<int>(reds.size()) == count_edges(g, Color::Red));
        CHECK(static_cast<int>(blues.size()) == count_edges(g, Color::Blue));
        // middle levels are k-cycles
        for (int l = 1; l < g.innermost_level; ++l) {
            int cyc = 0;
            for (const auto& e : g.edges) cyc += e.kind == 0 && e.level == l;
            CHECK(cyc == k);
        }
    }
}

TEST_CASE("bridging path examples for k=6") {
    SpiderwebGadget g = build_spiderweb(6);
    SUBCASE("blue 0 -> 4 ascends to level 2") {
        auto p = bridging_path(g, g.vertex_id(0, 0), g.vertex_id(0, 4));
        std::vector<int> want = {g.vertex_id(0, 0), g.vertex_id(2, 0), g.vertex_id(2, 2),
                                 g.vertex_id(2, 4), g.vertex_id(0, 4)};
        CHECK(p == want);
    }
    SUBCASE("blue 0 -> 6 goes through the innermost vertex") {
        auto p = bridging_path(g, g.vertex_id(0, 0), g.vertex_id(0, 6));
        std::vector<int> want = {g.vertex_id(0, 0), g.vertex_id(2, 0), g.innermost_vertex(),
                                 g.vertex_id(2, 6), g.vertex_id(0, 6)};
        CHECK(p == want);
    }
    SUBCASE("red 1 -> 3 stays on level 1") {
        auto p = bridging_path(g, g.vertex_id(1, 1), g.vertex_id(1, 3));
        std::vector<int> want = {g.vertex_id(1, 1), g.vertex_id(1, 3)};
        CHECK(p == want);
    }
    SUBCASE("bad endpoints are rejected") {
        CHECK_THROWS_AS(bridging_path(g, g.vertex_id(0, 0), g.vertex_id(1, 1)), BadEndpoints);
        CHECK_THROWS_AS(bridging_path(g, g.vertex_id(2, 0), g.vertex_id(2, 2)), BadEndpoints);
        CHECK_THROWS_AS(bridging_path(g, g.vertex_id(0, 0), g.vertex_id(0, 0)), BadEndpoints);
    }
}

TEST_CASE("bridging paths stay within their color") {
    for (int k = 3; k <= 8; ++k) {
        SpiderwebGadget g = build_spiderweb(k);
        for (int x = 0; x < 2 * k; x += 2)
            for (int i = 1; i <= k / 2; ++i) {
                int y = (x + 2 * i) % (2 * k);
                auto p = bridging_path(g, g.vertex_id(0, x), g.vertex_id(0, y));
                for (int vid : p) CHECK(g.color_of(vid) == Color::Blue);
                auto q = bridging_path(g, g.vertex_id(1, x + 1), g.vertex_id(1, (y + 1) % (2 * k)));
                for (int vid : q) CHECK(g.color_of(vid) == Color::Red);
            }
    }
}

TEST_CASE("non-interleaved red/blue bridging paths never use a crossing pair") {
    // exhaustive over all valid demand pairs for k <= 8 (Lemma 3 replay)
    for (int k = 3; k <= 8; ++k) {
        SpiderwebGadget g = build_spiderweb(k);
        auto edge_set = [&](const std::vector<int>& path) {
            std::set<std::pair<int, int>> s;
            for (size_t i = 0; i + 1 < path.size(); ++i)
                s.insert({std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])});
            return s;
        };
        for (int bx = 0; bx < 2 * k; bx += 2)
            for (int bi = 1; bi <= k / 2; ++bi) {
                int by = (bx + 2 * bi) % (2 * k);
                auto bp = bridging_path(g, g.vertex_id(0, bx), g.vertex_id(0, by));
                auto bset = edge_set(bp);
                for (int rx = 1; rx < 2 * k; rx += 2)
                    for (int ri = 1; ri <= k / 2; ++ri) {
                        int ry = (rx + 2 * ri) % (2 * k);
                        if (interleaved(bx, by, rx, ry, 2 * k)) continue;
                        auto rp = bridging_path(g, g.vertex_id(1, rx), g.vertex_id(1, ry));
                        auto rset = edge_set(rp);
                        for (auto [re, be] : g.crossings) {
                            auto rkey = std::make_pair(std::min(g.edges[re].u, g.edges[re].v),
                                                       std::max(g.edges[re].u, g.edges[re].v));
                            auto bkey = std::make_pair(std::min(g.edges[be].u, g.edges[be].v),
                                                       std::max(g.edges[be].u, g.edges[be].v));
                            bool both = rset.count(rkey) && bset.count(bkey);
                            CHECK_FALSE(both);
                        }
                    }
            }
    }
}

TEST_CASE("nested same-color bridging paths are vertex-disjoint") {
    for (int k = 4; k <= 8; ++k) {
        SpiderwebGadget g = build_spiderweb(k);
        for (int x1 = 0; x1 < 2 * k; x1 += 2)
            for (int i1 = 1; i1 <= k / 2; ++i1) {
                int y1 = (x1 + 2 * i1) % (2 * k);
                auto p1 = bridging_path(g, g.vertex_id(0, x1), g.vertex_id(0, y1));
                std::set<int> s1(p1.begin(), p1.end());
                for (int x2 = 0; x2 < 2 * k; x2 += 2)
                    for (int i2 = 1; i2 <= k / 2; ++i2) {
                        int y2 = (x2 + 2 * i2) % (2 * k);
                        // all four endpoints distinct and non-interleaved
                        std::set<int> ends = {x1, y1, x2, y2};
                        if (ends.size() != 4) continue;
                        if (interleaved(x1, y1, x2, y2, 2 * k)) continue;
                        auto p2 = bridging_path(g, g.vertex_id(0, x2), g.vertex_id(0, y2));
                        bool disjoint = true;
                        for (int vid : p2) disjoint = disjoint && !s1.count(vid);
                        CHECK(disjoint);
                    }
            }
    }
}

TEST_CASE("gadget appears in the dual pair for kappa = 6") {
    // purple bar with five neighbors above/below plus a merged bottom pair:
    // after Step 1 the cycle has 6 intervals, so k = 3
    ColoredGrid g = parse_grid("BBBBB\nBRBRB\nPPPPP\nR...R\nRRRRR");
    AnalyzedGrid ag = analyze(g);
    REQUIRE(ag.gadgets.size() == 1);
    const GadgetInstance& gi = ag.gadgets.begin()->second;
    CHECK(gi.gadget.k == 3);
    // red edges: level-1 cycle (3); blue edges: innermost fan (3)
    CHECK(ag.pair.e() == 3);
    CHECK(ag.verdict.solvable);  // n_r = 3, n_b = 1 + innermost, e = 3
}
