#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "egoten/assignment.hpp"
#include "egoten/graph.hpp"

namespace egoten {

/// Shared nodes between a pair of communities. The shared nodes count toward
/// both community sizes, so N = Σ sizes − Σ counts.
struct OverlapSpec {
    index_t count;
    index_t a, b;  // community indices, a < b
};

struct BlockModel {
    std::vector<index_t> sizes;
    double p_in = 0.0;
    double p_out = 0.0;
    std::vector<OverlapSpec> overlaps;
};

/// Block-stochastic graph: node pairs sharing at least one community connect
/// with p_in, all other pairs with p_out. Returns the graph and the planted
/// cover (with overlaps where specified).
std::pair<Graph, Cover> block_stochastic(const BlockModel& model, std::uint64_t seed);

struct MigrationModel {
    index_t n = 0;        // must equal sizes[0] + sizes[1]
    index_t t_len = 0;
    std::array<index_t, 2> sizes{0, 0};
    index_t migrants = 0;
    double transition_mean = 0.0;
    double transition_std = 0.0;
    double p_in = 0.0;
    double p_out = 0.0;
};

/// Two-block temporal scenario: labels start as two blocks; each migrant
/// moves to a third community at its own transition slot, drawn from
/// N(mean, std), rounded to the nearest integer and clamped to [2, T]
/// (1-based slots; snapshot t is slot t+1). Edges are redrawn independently
/// per snapshot from the current labels. Returns the snapshots and one
/// ground-truth cover per snapshot.
std::pair<TemporalGraph, std::vector<Cover>> temporal_migration(const MigrationModel& model,
                                                                std::uint64_t seed);

}  // namespace egoten
