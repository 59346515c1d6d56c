#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "egoten/graph.hpp"
#include "egoten/synth.hpp"

using namespace egoten;

namespace {

bool same_graph(const Graph& a, const Graph& b) {
    if (a.n_nodes() != b.n_nodes() || a.n_edges() != b.n_edges()) return false;
    for (index_t v = 0; v < a.n_nodes(); ++v) {
        const auto na = a.neighbors(v), nb = b.neighbors(v);
        if (!std::equal(na.begin(), na.end(), nb.begin(), nb.end())) return false;
        const auto wa = a.weights(v), wb = b.weights(v);
        if (!std::equal(wa.begin(), wa.end(), wb.begin(), wb.end())) return false;
    }
    return true;
}

index_t edges_within(const Graph& g, const std::vector<index_t>& comm) {
    std::vector<char> in(g.n_nodes(), 0);
    for (index_t v : comm) in[v] = 1;
    index_t count = 0;
    for (index_t v : comm)
        for (index_t u : g.neighbors(v))
            if (u > v && in[u]) ++count;
    return count;
}

}  // namespace

TEST_SUITE("synth") {

TEST_CASE("deterministic extremes of the block model") {
    BlockModel model;
    model.sizes = {3, 3};
    model.p_in = 1.0;
    model.p_out = 0.0;
    auto [g, truth] = block_stochastic(model, 7);

    CHECK(g.n_nodes() == 6);
    CHECK(g.n_edges() == 6);  // two triangles
    for (index_t v : {0, 1, 2})
        for (index_t u : {0, 1, 2})
            if (u != v) CHECK(g.has_edge(v, u));
    for (index_t v : {0, 1, 2})
        for (index_t u : {3, 4, 5}) CHECK(!g.has_edge(v, u));

    REQUIRE(truth.communities.size() == 2);
    CHECK(truth.communities[0] == std::vector<index_t>{0, 1, 2});
    CHECK(truth.communities[1] == std::vector<index_t>{3, 4, 5});
    CHECK(truth.is_disjoint_partition());

    model.p_in = 0.0;
    auto [empty, t2] = block_stochastic(model, 7);
    CHECK(empty.n_edges() == 0);
    CHECK(empty.n_nodes() == 6);

    model.p_in = 1.0;
    model.p_out = 1.0;
    auto [full, t3] = block_stochastic(model, 7);
    CHECK(full.n_edges() == 15);
}

TEST_CASE("overlap layout keeps stated sizes and the shared tail") {
    BlockModel model;
    model.sizes = {60, 60};
    model.p_in = 1.0;
    model.p_out = 0.0;
    model.overlaps = {{10, 0, 1}};
    auto [g, truth] = block_stochastic(model, 3);

    CHECK(g.n_nodes() == 110);
    REQUIRE(truth.communities.size() == 2);
    CHECK(truth.communities[0].size() == 60);
    CHECK(truth.communities[1].size() == 60);
    CHECK(!truth.is_disjoint_partition());
    truth.validate();

    std::vector<index_t> shared;
    std::set_intersection(truth.communities[0].begin(), truth.communities[0].end(),
                          truth.communities[1].begin(), truth.communities[1].end(),
                          std::back_inserter(shared));
    REQUIRE(shared.size() == 10);
    for (index_t q = 0; q < 10; ++q) CHECK(shared[q] == 50 + q);

    // Shared nodes link into both blocks at p_in.
    CHECK(g.has_edge(50, 0));
    CHECK(g.has_edge(50, 109));
    // Exclusive nodes of different blocks never connect at p_out = 0.
    CHECK(!g.has_edge(0, 109));
}

TEST_CASE("small overlapping model produces two triangles sharing a node") {
    BlockModel model;
    model.sizes = {3, 3};
    model.p_in = 1.0;
    model.p_out = 0.0;
    model.overlaps = {{1, 0, 1}};
    auto [g, truth] = block_stochastic(model, 1);
    CHECK(g.n_nodes() == 5);
    CHECK(g.n_edges() == 6);
    CHECK(truth.communities[0] == std::vector<index_t>{0, 1, 2});
    CHECK(truth.communities[1] == std::vector<index_t>{2, 3, 4});
    CHECK(!g.has_edge(0, 3));
    CHECK(g.has_edge(2, 4));
}

TEST_CASE("edge counts stay near their binomial expectations") {
    BlockModel model;
    model.sizes = {40, 40};
    model.p_in = 0.3;
    model.p_out = 0.05;
    auto [g, truth] = block_stochastic(model, 11);

    const index_t within =
        edges_within(g, truth.communities[0]) + edges_within(g, truth.communities[1]);
    const index_t across = g.n_edges() - within;

    // 1560 within-pairs at 0.3, 1600 across-pairs at 0.05; 3 sigma bands.
    const double mu_in = 1560 * 0.3, sd_in = std::sqrt(1560 * 0.3 * 0.7);
    const double mu_out = 1600 * 0.05, sd_out = std::sqrt(1600 * 0.05 * 0.95);
    CHECK(std::abs(within - mu_in) <= 3.0 * sd_in);
    CHECK(std::abs(across - mu_out) <= 3.0 * sd_out);
}

TEST_CASE("block model is seed deterministic") {
    BlockModel model;
    model.sizes = {20, 20};
    model.p_in = 0.4;
    model.p_out = 0.1;
    auto [g1, t1] = block_stochastic(model, 5);
    auto [g2, t2] = block_stochastic(model, 5);
    CHECK(same_graph(g1, g2));
    CHECK(t1.communities == t2.communities);

    auto [g3, t3] = block_stochastic(model, 6);
    CHECK(!same_graph(g1, g3));
    CHECK(t1.communities == t3.communities);  // layout is seed independent
}

TEST_CASE("block model rejects malformed configurations") {
    BlockModel model;
    CHECK_THROWS_AS(block_stochastic(model, 1), ConfigError);  // no sizes

    model.sizes = {5, 0};
    model.p_in = 0.5;
    CHECK_THROWS_AS(block_stochastic(model, 1), ConfigError);

    model.sizes = {5, 5};
    model.p_in = 1.5;
    CHECK_THROWS_AS(block_stochastic(model, 1), ConfigError);
    model.p_in = 0.5;
    model.p_out = -0.1;
    CHECK_THROWS_AS(block_stochastic(model, 1), ConfigError);
    model.p_out = 0.1;

    model.overlaps = {{2, 1, 1}};  // a must precede b
    CHECK_THROWS_AS(block_stochastic(model, 1), ConfigError);
    model.overlaps = {{2, 1, 0}};
    CHECK_THROWS_AS(block_stochastic(model, 1), ConfigError);
    model.overlaps = {{0, 0, 1}};
    CHECK_THROWS_AS(block_stochastic(model, 1), ConfigError);
    model.overlaps = {{5, 0, 1}};  // as large as the borrowing community
    CHECK_THROWS_AS(block_stochastic(model, 1), ConfigError);

    model.sizes = {5, 9};
    model.overlaps = {{6, 0, 1}};  // lender only owns 5 nodes
    CHECK_THROWS_AS(block_stochastic(model, 1), ConfigError);

    model.sizes = {6, 6, 6};
    model.overlaps = {{2, 0, 1}, {2, 0, 2}};  // community 0 lends twice
    CHECK_THROWS_AS(block_stochastic(model, 1), ConfigError);
    model.overlaps = {{2, 0, 2}, {2, 1, 2}};  // community 2 borrows twice
    CHECK_THROWS_AS(block_stochastic(model, 1), ConfigError);
}

TEST_CASE("migration scenario endpoints carry the planted labels") {
    MigrationModel model;
    model.n = 120;
    model.t_len = 10;
    model.sizes = {60, 60};
    model.migrants = 48;
    model.transition_mean = 5.0;
    model.transition_std = 1.0;
    model.p_in = 0.3;
    model.p_out = 0.1;
    auto [tg, truths] = temporal_migration(model, 42);

    CHECK(tg.t_len() == 10);
    CHECK(tg.n_nodes == 120);
    REQUIRE(truths.size() == 10);

    // First snapshot: nobody has moved yet.
    REQUIRE(truths[0].communities.size() == 2);
    CHECK(truths[0].communities[0].size() == 60);
    CHECK(truths[0].communities[1].size() == 60);

    // Last snapshot: every migrant has moved, leaving 36 + 36 + 48.
    REQUIRE(truths[9].communities.size() == 3);
    CHECK(truths[9].communities[0].size() == 36);
    CHECK(truths[9].communities[1].size() == 36);
    CHECK(truths[9].communities[2].size() == 48);

    for (const Cover& c : truths) {
        c.validate();
        CHECK(c.is_disjoint_partition());
    }

    // The third community only grows over time.
    std::size_t prev = 0;
    for (const Cover& c : truths) {
        std::size_t third = c.communities.size() == 3 ? c.communities[2].size() : 0;
        CHECK(third >= prev);
        prev = third;
    }
}

TEST_CASE("zero migrants keeps both blocks in every snapshot") {
    MigrationModel model;
    model.n = 12;
    model.t_len = 4;
    model.sizes = {6, 6};
    model.migrants = 0;
    model.p_in = 1.0;
    model.p_out = 0.0;
    auto [tg, truths] = temporal_migration(model, 9);
    for (index_t t = 0; t < 4; ++t) {
        REQUIRE(truths[t].communities.size() == 2);
        CHECK(truths[t].communities == truths[0].communities);
        // With p_in = 1 and p_out = 0 each snapshot is exactly two cliques.
        CHECK(tg.snapshots[t].n_edges() == 30);
        CHECK(tg.snapshots[t].has_edge(0, 5));
        CHECK(!tg.snapshots[t].has_edge(0, 6));
    }
}

TEST_CASE("zero transition spread moves everyone at the same slot") {
    MigrationModel model;
    model.n = 8;
    model.t_len = 5;
    model.sizes = {4, 4};
    model.migrants = 4;
    model.transition_mean = 3.0;
    model.transition_std = 0.0;
    model.p_in = 0.5;
    model.p_out = 0.1;
    auto [tg, truths] = temporal_migration(model, 2);
    // Slot 3 means membership flips from snapshot index 2 onward.
    CHECK(truths[0].communities.size() == 2);
    CHECK(truths[1].communities.size() == 2);
    REQUIRE(truths[2].communities.size() == 3);
    CHECK(truths[2].communities[2].size() == 4);
    CHECK(truths[3].communities == truths[2].communities);
    CHECK(truths[4].communities == truths[2].communities);
}

TEST_CASE("transition slots clamp to the observation window") {
    MigrationModel model;
    model.n = 8;
    model.t_len = 4;
    model.sizes = {4, 4};
    model.migrants = 2;
    model.transition_std = 0.0;
    model.p_in = 0.5;
    model.p_out = 0.1;

    model.transition_mean = -100.0;  // clamps to slot 2
    auto [tg_lo, truths_lo] = temporal_migration(model, 3);
    CHECK(truths_lo[0].communities.size() == 2);
    REQUIRE(truths_lo[1].communities.size() == 3);
    CHECK(truths_lo[1].communities[2].size() == 2);

    model.transition_mean = 100.0;  // clamps to slot T
    auto [tg_hi, truths_hi] = temporal_migration(model, 3);
    CHECK(truths_hi[2].communities.size() == 2);
    REQUIRE(truths_hi[3].communities.size() == 3);
    CHECK(truths_hi[3].communities[2].size() == 2);
}

TEST_CASE("migration scenario is seed deterministic") {
    MigrationModel model;
    model.n = 20;
    model.t_len = 3;
    model.sizes = {10, 10};
    model.migrants = 6;
    model.transition_mean = 2.0;
    model.transition_std = 1.0;
    model.p_in = 0.4;
    model.p_out = 0.05;
    auto [a, ta] = temporal_migration(model, 12);
    auto [b, tb] = temporal_migration(model, 12);
    for (index_t t = 0; t < 3; ++t) {
        CHECK(same_graph(a.snapshots[t], b.snapshots[t]));
        CHECK(ta[t].communities == tb[t].communities);
    }
    auto [c, tc] = temporal_migration(model, 13);
    bool any_diff = false;
    for (index_t t = 0; t < 3; ++t)
        if (!same_graph(a.snapshots[t], c.snapshots[t])) any_diff = true;
    CHECK(any_diff);
}

TEST_CASE("migration scenario rejects malformed configurations") {
    MigrationModel model;
    model.n = 10;
    model.t_len = 3;
    model.sizes = {5, 5};
    model.p_in = 0.5;
    model.p_out = 0.1;

    MigrationModel bad = model;
    bad.n = 11;
    CHECK_THROWS_AS(temporal_migration(bad, 1), ConfigError);

    bad = model;
    bad.t_len = 1;
    CHECK_THROWS_AS(temporal_migration(bad, 1), ConfigError);

    bad = model;
    bad.migrants = 11;  // 6 from the first block exceeds its size
    CHECK_THROWS_AS(temporal_migration(bad, 1), ConfigError);

    bad = model;
    bad.transition_std = -1.0;
    CHECK_THROWS_AS(temporal_migration(bad, 1), ConfigError);

    bad = model;
    bad.p_in = 2.0;
    CHECK_THROWS_AS(temporal_migration(bad, 1), ConfigError);

    bad = model;
    bad.sizes = {0, 10};
    bad.n = 10;
    CHECK_THROWS_AS(temporal_migration(bad, 1), ConfigError);
}

}  // TEST_SUITE
