#include <set>

#include "doctest.h"
#include "gridpaint/solvability.hpp"

using namespace gridpaint;

namespace {

std::vector<char> colored_colors(const std::vector<CycleEntry>& cycle) {
    std::vector<char> out;
    for (const auto& e : cycle)
        if (!e.is_gap) out.push_back(color_char(e.color));
    return out;
}

}  // namespace

TEST_CASE("step 1 collapses consecutive duplicates") {
    // cycle around the plus: B(0,2), B(2,2), R(2,0), R(0,0) with gaps
    RegionMap m = decompose_regions(parse_grid("RPB\nPPP\nRPB"));
    int pid = m.region_at(1, 1);
    MergeResult res = merge_consecutive_same_color(m, m.profile_for(pid));
    CHECK(res.connections.size() == 2);
    CHECK(colored_colors(res.outer).size() == 2);
    std::multiset<char> conn_colors;
    for (const auto& c : res.connections) conn_colors.insert(color_char(c.color));
    CHECK(conn_colors == std::multiset<char>{'b', 'r'});
}

TEST_CASE("step 1 leaves alternating cycles unchanged") {
    RegionMap m = decompose_regions(parse_grid("RPB\nPPP\nBPR"));
    int pid = m.region_at(1, 1);
    MergeResult res = merge_consecutive_same_color(m, m.profile_for(pid));
    CHECK(res.connections.empty());
    CHECK(colored_colors(res.outer) == std::vector<char>{'b', 'r', 'b', 'r'});
}

TEST_CASE("step 1 records a self-merge when one region touches twice") {
    RegionMap m = decompose_regions(parse_grid("RRR\nR.R\nRPR"));
    int pid = m.region_at(2, 1);
    MergeResult res = merge_consecutive_same_color(m, m.profile_for(pid));
    REQUIRE(res.connections.size() == 1);
    CHECK(res.connections[0].color == Color::Red);
    CHECK_FALSE(res.connections[0].arc.empty());  // runs along a gap arc
    CHECK(colored_colors(res.outer) == std::vector<char>{'r'});
}

TEST_CASE("reduce_holes: white hole cut with zero corridors") {
    RegionMap m = decompose_regions(parse_grid("PPP\nPWP\nPPP"));
    HoleReductionResult hr = reduce_holes(m);
    REQUIRE(hr.cuts.size() == 1);
    CHECK(hr.cuts[0].corridors.empty());
    REQUIRE(hr.profiles.size() == 1);
    CHECK(hr.profiles[0].colored_positions().empty());
}

TEST_CASE("reduce_holes: G5 annulus gets one blue corridor") {
    RegionMap m = decompose_regions(parse_grid("RRRRR\nRPPPR\nRPBPR\nRPPPR\nRRBRR"));
    HoleReductionResult hr = reduce_holes(m);
    REQUIRE(hr.cuts.size() == 1);
    REQUIRE(hr.cuts[0].corridors.size() == 1);
    CHECK(hr.cuts[0].corridors[0].color == Color::Blue);
    // corridor runs via cell (3,2): the outer attachment is its bottom edge
    const auto& outer_port = hr.cuts[0].corridors[0].outer;
    REQUIRE(!outer_port.empty());
    CHECK(outer_port.front().row == 3);
    CHECK(outer_port.front().col == 2);
    // resulting profile is hole-free and alternates R,B
    const MergedProfile* mp = nullptr;
    for (const auto& p : hr.profiles)
        if (!p.colored_positions().empty()) mp = &p;
    REQUIRE(mp != nullptr);
    CHECK(colored_colors(mp->cycle).size() == 2);
    // the blue cell inside and below merged into one class
    int inner = m.region_at(2, 2), below = m.region_at(4, 2);
    CHECK(hr.region_class[inner] == hr.region_class[below]);
}

TEST_CASE("reduce_holes: hole-free regions are untouched") {
    RegionMap m = decompose_regions(parse_grid("RPB\nPPP\nBPR"));
    HoleReductionResult hr = reduce_holes(m);
    CHECK(hr.cuts.empty());
    CHECK(hr.connections.empty());
}

TEST_CASE("admits_painting on the Theorem 1 fixtures") {
    SUBCASE("RPB is solvable") {
        Verdict v = admits_painting(parse_grid("RPB"));
        CHECK(v.solvable);
        CHECK(v.n_r == 1);
        CHECK(v.n_b == 1);
        CHECK(v.e == 0);
    }
    SUBCASE("plus with alternating corners is unsolvable") {
        Verdict v = admits_painting(parse_grid("RPB\nPPP\nBPR"));
        CHECK_FALSE(v.solvable);
        CHECK(v.n_r == 2);
        CHECK(v.n_b == 2);
        CHECK(v.e == 1);
    }
    SUBCASE("plus with same-color columns is solvable") {
        Verdict v = admits_painting(parse_grid("RPB\nPPP\nRPB"));
        CHECK(v.solvable);
        CHECK(v.n_r == 1);
        CHECK(v.n_b == 1);
        CHECK(v.e == 0);
    }
    SUBCASE("G5 annulus is solvable") {
        Verdict v = admits_painting(parse_grid("RRRRR\nRPPPR\nRPBPR\nRPPPR\nRRBRR"));
        CHECK(v.solvable);
    }
}

TEST_CASE("admits_painting degenerate color cases") {
    CHECK(admits_painting(parse_grid("...")).solvable);       // all white
    CHECK(admits_painting(parse_grid("RRR")).solvable);       // single color only
    CHECK_FALSE(admits_painting(parse_grid("R.R")).solvable); // split red
    CHECK(admits_painting(parse_grid("P")).solvable);         // lone purple cell
    CHECK(admits_painting(parse_grid("PP")).solvable);
    CHECK_FALSE(admits_painting(parse_grid("P.P")).solvable); // two isolated purple blobs
    CHECK(admits_painting(parse_grid("RPR")).solvable);       // blue enclosed in the purple cell
    CHECK(admits_painting(parse_grid("RRR\nR.R\nRPR")).solvable);
}

TEST_CASE("kappa-0 purple region blocks foreign components") {
    // the purple island hosts its own red and blue; the far red cell can
    // never join that red
    CHECK_FALSE(admits_painting(parse_grid("P..\n..R")).solvable);
    CHECK(admits_painting(parse_grid("P..\n...")).solvable);
}

TEST_CASE("verdict invariance under rotation and color swap") {
    const char* grids[] = {"RPB", "RPB\nPPP\nBPR", "RPB\nPPP\nRPB",
                           "RRRRR\nRPPPR\nRPBPR\nRPPPR\nRRBRR", "PPP\nPWP\nPPP",
                           "RPR", "P.P", "RRR\nR.R\nRPR"};
    for (const char* txt : grids) {
        ColoredGrid g = parse_grid(txt);
        bool base = admits_painting(g).solvable;
        CHECK(admits_painting(swap_colors(g)).solvable == base);
        ColoredGrid r = g;
        for (int i = 0; i < 3; ++i) {
            r = rotate90(r);
            CHECK(admits_painting(r).solvable == base);
        }
    }
}

TEST_CASE("crossing bijection pairs every edge exactly once") {
    AnalyzedGrid ag = analyze(parse_grid("RPB\nPPP\nBPR"));
    REQUIRE(ag.pair.e() == 1);
    CHECK(ag.pair.red_edges[0].cross == 0);
    CHECK(ag.pair.blue_edges[0].cross == 0);
}

TEST_CASE("dual pair JSON dump is canonical") {
    AnalyzedGrid ag = analyze(parse_grid("RPB\nPPP\nBPR"));
    std::string j1 = dual_pair_to_json(ag);
    std::string j2 = dual_pair_to_json(analyze(parse_grid("RPB\nPPP\nBPR")));
    CHECK(j1 == j2);
    CHECK(j1.find("\"e\":1") != std::string::npos);
    CHECK(j1.find("\"solvable\":false") != std::string::npos);
}
