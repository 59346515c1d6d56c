#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "egoten/assignment.hpp"
#include "egoten/graph.hpp"
#include "egoten/metrics.hpp"
#include "egoten/nmf.hpp"
#include "egoten/synth.hpp"

using namespace egoten;

namespace {

Graph graph_of(const std::string& text) {
    ParseOptions opts;
    std::istringstream in(text);
    return parse_edge_list(in, opts).graph;
}

void check_feasible(const NmfResult& r) {
    for (std::size_t i = 0; i < r.u.rows(); ++i) {
        double sum = 0.0;
        for (std::size_t k = 0; k < r.u.cols(); ++k) {
            CHECK(r.u(i, k) >= 0.0);
            sum += r.u(i, k);
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
    for (std::size_t q = 0; q < r.v.size(); ++q) CHECK(r.v.data()[q] >= 0.0);
}

}  // namespace

TEST_SUITE("nmf") {

TEST_CASE("block diagonal of two all-ones blocks factors exactly") {
    // Two 2-cliques plus unit diagonals: W is block-diag(J2, J2), which a
    // rank-2 factorization with simplex U rows reproduces exactly.
    auto g = graph_of("0 1\n2 3\n");
    SolverConfig cfg;
    cfg.k = 2;
    cfg.lambda = 0.0;
    cfg.max_outer = 400;
    cfg.eps_outer = 1e-10;
    cfg.eps_admm = 1e-10;
    cfg.max_admm = 100;
    cfg.seed = 1;
    auto r = nmf_decompose(g, cfg, true);

    REQUIRE(!r.trace.rows.empty());
    CHECK(r.trace.rows.back().objective <= 1e-6);
    check_feasible(r);

    Cover truth;
    truth.n_nodes = 4;
    truth.communities = {{0, 1}, {2, 3}};
    CHECK(nmi(truth, hard_assign(r.u)) == 1.0);
}

TEST_CASE("edgeless graph drives v to zero") {
    auto g = Graph::from_edges(3, {});
    SolverConfig cfg;
    cfg.k = 2;
    cfg.lambda = 0.1;
    cfg.max_outer = 200;
    cfg.eps_outer = 1e-12;
    cfg.eps_admm = 1e-10;
    cfg.max_admm = 200;
    auto r = nmf_decompose(g, cfg);
    CHECK(r.trace.rows.back().objective <= 1e-8);
    CHECK(frobenius_norm(r.v) <= 1e-4);
    check_feasible(r);  // u rows stay on the simplex even with nothing to fit
}

TEST_CASE("two disjoint triangles separate perfectly") {
    auto g = graph_of("0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n");
    SolverConfig cfg;
    cfg.k = 2;
    cfg.lambda = 0.05;
    cfg.max_outer = 300;
    cfg.seed = 1;
    auto r = nmf_decompose(g, cfg);

    Cover truth;
    truth.n_nodes = 6;
    truth.communities = {{0, 1, 2}, {3, 4, 5}};
    CHECK(nmi(truth, hard_assign(r.u)) == 1.0);
    check_feasible(r);
}

TEST_CASE("trace is monotone with zeroed dc") {
    BlockModel model;
    model.sizes = {10, 10};
    model.p_in = 0.6;
    model.p_out = 0.05;
    auto [g, truth] = block_stochastic(model, 4);

    SolverConfig cfg;
    cfg.k = 2;
    cfg.lambda = 0.1;
    cfg.max_outer = 60;
    cfg.seed = 3;
    auto r = nmf_decompose(g, cfg);

    REQUIRE(!r.trace.rows.empty());
    double prev = std::numeric_limits<double>::infinity();
    index_t expect_iter = 1;
    for (const TraceRow& row : r.trace.rows) {
        CHECK(row.iter == expect_iter++);
        CHECK(row.objective <= prev + 1e-6 * std::max(1.0, std::abs(prev)));
        CHECK(row.dc == 0.0);
        prev = row.objective;
    }
}

TEST_CASE("nmf is seed deterministic") {
    auto g = graph_of("0 1\n0 2\n1 2\n2 3\n3 4\n");
    SolverConfig cfg;
    cfg.k = 2;
    cfg.max_outer = 40;
    cfg.seed = 8;
    auto a = nmf_decompose(g, cfg);
    auto b = nmf_decompose(g, cfg);
    CHECK(a.u == b.u);
    CHECK(a.v == b.v);
    REQUIRE(a.trace.rows.size() == b.trace.rows.size());
    for (std::size_t q = 0; q < a.trace.rows.size(); ++q)
        CHECK(a.trace.rows[q].objective == b.trace.rows[q].objective);

    cfg.seed = 9;
    auto c = nmf_decompose(g, cfg);
    CHECK(!(a.u == c.u));
}

}  // TEST_SUITE
