#include <sstream>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "egoten/graph.hpp"

using namespace egoten;

namespace {

ParsedGraph parse(const std::string& text, ParseOptions opts = {}) {
    std::istringstream in(text);
    return parse_edge_list(in, opts);
}

ParsedTemporalGraph parse_temporal(const std::string& text, ParseOptions opts = {}) {
    std::istringstream in(text);
    return parse_temporal_edge_list(in, opts);
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("basic unweighted parse builds a symmetric csr") {
    auto p = parse("0 1\n1 2\n");
    const Graph& g = p.graph;
    CHECK(g.n_nodes() == 3);
    CHECK(g.n_edges() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.edge_weight(1, 2) == 1.0);
    CHECK(g.strength(1) == 2.0);
    CHECK(g.total_weight() == 2.0);
    CHECK(p.report.duplicate_edges == 0);
    CHECK(p.report.self_loops_dropped == 0);

    auto nb = g.neighbors(1);
    REQUIRE(nb.size() == 2);
    CHECK(nb[0] == 0);
    CHECK(nb[1] == 2);
}

TEST_CASE("comments, blank lines, and tabs are tolerated") {
    auto p = parse("# a header\n\n0\t1\n  \n1 2  # trailing note\n");
    CHECK(p.graph.n_nodes() == 3);
    CHECK(p.graph.n_edges() == 2);
}

TEST_CASE("ids are compacted densely in ascending original order") {
    auto p = parse("10 40\n40 7\n");
    CHECK(p.graph.n_nodes() == 3);
    // ascending originals: 7 -> 0, 10 -> 1, 40 -> 2
    CHECK(p.remap.to_original == std::vector<std::int64_t>{7, 10, 40});
    CHECK(p.remap.require_internal(40) == 2);
    CHECK(p.graph.has_edge(1, 2));
    CHECK(p.graph.has_edge(0, 2));
    CHECK(!p.graph.has_edge(0, 1));
    CHECK_THROWS_AS(p.remap.require_internal(11), UsageError);
}

TEST_CASE("one-based indexing shifts ids down") {
    ParseOptions opts;
    opts.indexing_base = 1;
    auto p = parse("1 2\n2 3\n", opts);
    CHECK(p.graph.n_nodes() == 3);
    CHECK(p.remap.to_original == std::vector<std::int64_t>{1, 2, 3});
    CHECK(p.graph.has_edge(0, 1));

    // An id below the base is malformed.
    CHECK_THROWS_AS(parse("0 1\n", opts), ParseError);
}

TEST_CASE("explicit node count pins the id space without compaction") {
    ParseOptions opts;
    opts.n_nodes = 6;
    auto p = parse("0 5\n", opts);
    CHECK(p.graph.n_nodes() == 6);
    CHECK(p.graph.degree(3) == 0);  // isolated nodes exist
    CHECK(p.remap.to_original == std::vector<std::int64_t>{0, 1, 2, 3, 4, 5});

    CHECK_THROWS_AS(parse("0 6\n", opts), UsageError);  // id out of the pinned range
}

TEST_CASE("weighted parse keeps weights and rejects bad ones") {
    ParseOptions opts;
    opts.weighted = true;
    auto p = parse("0 1 2.5\n1 2 0.5\n", opts);
    CHECK(p.graph.edge_weight(0, 1) == 2.5);
    CHECK(p.graph.edge_weight(2, 1) == 0.5);
    CHECK(p.graph.total_weight() == 3.0);

    // The weight column is optional per line and defaults to 1.
    auto q = parse("0 1 2.5\n1 2\n", opts);
    CHECK(q.graph.edge_weight(1, 2) == 1.0);

    CHECK_THROWS_AS(parse("0 1 0\n", opts), ParseError);       // zero weight
    CHECK_THROWS_AS(parse("0 1 -2\n", opts), ParseError);      // negative weight
    CHECK_THROWS_AS(parse("0 1 nope\n", opts), ParseError);    // non-numeric
    CHECK_THROWS_AS(parse("0 1 1.0 9\n", opts), ParseError);   // extra column
}

TEST_CASE("unweighted parse rejects a weight column") {
    CHECK_THROWS_AS(parse("0 1 2.0\n"), ParseError);
    CHECK_THROWS_AS(parse("0\n"), ParseError);  // too few columns
}

TEST_CASE("duplicates merge keeping the last weight; self-loops are dropped") {
    ParseOptions opts;
    opts.weighted = true;
    auto p = parse("0 1 1.0\n1 0 3.0\n2 2 9.0\n1 2 1.5\n", opts);
    CHECK(p.graph.n_nodes() == 3);  // node 2 still observed through its self-loop
    CHECK(p.graph.edge_weight(0, 1) == 3.0);
    CHECK(p.report.duplicate_edges == 1);
    CHECK(p.report.self_loops_dropped == 1);
}

TEST_CASE("a node observed only via self-loops stays in the graph") {
    auto p = parse("0 1\n5 5\n");
    CHECK(p.graph.n_nodes() == 3);
    CHECK(p.remap.to_original == std::vector<std::int64_t>{0, 1, 5});
    CHECK(p.graph.degree(2) == 0);
    CHECK(p.report.self_loops_dropped == 1);
}

TEST_CASE("empty input is a usage error") {
    CHECK_THROWS_AS(parse(""), UsageError);
    CHECK_THROWS_AS(parse("# only a comment\n\n"), UsageError);
}

TEST_CASE("parse errors carry the offending line number") {
    try {
        parse("0 1\nbroken line here\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("temporal parse groups snapshots and dedups per snapshot") {
    auto p = parse_temporal("0 0 1\n0 0 1\n2 1 2\n");
    CHECK(p.graph.t_len() == 3);  // T = 1 + max t, snapshot 1 is empty
    CHECK(p.graph.n_nodes == 3);
    CHECK(p.graph.snapshots[0].has_edge(0, 1));
    CHECK(p.graph.snapshots[1].n_edges() == 0);
    CHECK(p.graph.snapshots[2].has_edge(1, 2));
    CHECK(p.report.duplicate_edges == 1);

    // The same pair in different snapshots is not a duplicate.
    auto q = parse_temporal("0 0 1\n1 0 1\n");
    CHECK(q.report.duplicate_edges == 0);
    CHECK(q.graph.t_len() == 2);
}

TEST_CASE("temporal weighted parse and negative snapshot index") {
    ParseOptions opts;
    opts.weighted = true;
    auto p = parse_temporal("0 0 1 2.0\n1 0 1 4.0\n", opts);
    CHECK(p.graph.snapshots[0].edge_weight(0, 1) == 2.0);
    CHECK(p.graph.snapshots[1].edge_weight(0, 1) == 4.0);

    CHECK_THROWS_AS(parse_temporal("-1 0 1\n"), ParseError);
}

TEST_CASE("from_edges validates its inputs") {
    using E = std::tuple<index_t, index_t, double>;
    std::vector<E> loop{{1, 1, 1.0}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), Error);
    std::vector<E> range{{0, 7, 1.0}};
    CHECK_THROWS_AS(Graph::from_edges(3, range), Error);
    std::vector<E> neg{{0, 1, -1.0}};
    CHECK_THROWS_AS(Graph::from_edges(3, neg), Error);
}

TEST_CASE("egonet induces the closed neighborhood") {
    // Path 0-1-2: the egonet of 0 sees only edge (0,1); the egonet of 1 sees
    // both path edges but not a 0-2 edge (there is none).
    auto p = parse("0 1\n1 2\n");
    auto e0 = egonet(p.graph, 0, false);
    CHECK(e0.size() == 2);  // (0,1) and (1,0)
    auto e1 = egonet(p.graph, 1, false);
    CHECK(e1.size() == 4);

    // Triangle: every egonet contains all six directed pairs.
    auto t = parse("0 1\n1 2\n0 2\n");
    for (index_t c = 0; c < 3; ++c) CHECK(egonet(t.graph, c, false).size() == 6);

    // Entries arrive sorted by (i, j) and the diagonal option adds N[c] ones.
    auto ego = egonet(t.graph, 1, true);
    CHECK(ego.size() == 9);
    for (std::size_t q = 1; q < ego.size(); ++q) {
        bool ordered = ego[q - 1].i < ego[q].i ||
                       (ego[q - 1].i == ego[q].i && ego[q - 1].j < ego[q].j);
        CHECK(ordered);
    }
    std::size_t diag = 0;
    for (const auto& en : ego)
        if (en.i == en.j) {
            ++diag;
            CHECK(en.w == 1.0);
        }
    CHECK(diag == 3);
}

TEST_CASE("egonet respects weights and non-neighbors") {
    ParseOptions opts;
    opts.weighted = true;
    // Star plus an edge between two leaves: egonet of leaf 1 excludes leaf 3.
    auto p = parse("0 1 2.0\n0 2 1.0\n0 3 1.0\n1 2 5.0\n", opts);
    auto ego = egonet(p.graph, 1, false);
    // N[1] = {0, 1, 2}; edges among them: (0,1), (0,2), (1,2) -> 6 entries.
    CHECK(ego.size() == 6);
    double w12 = 0.0;
    for (const auto& en : ego) {
        CHECK(en.i != 3);
        CHECK(en.j != 3);
        if (en.i == 1 && en.j == 2) w12 = en.w;
    }
    CHECK(w12 == 5.0);
}

}  // TEST_SUITE
