#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "egoten/common.hpp"

namespace egoten {

/// Undirected weighted graph in CSR form. Neighbor lists are sorted, weights
/// are nonnegative and symmetric, and self-loops are never stored. Self-loops
/// only enter downstream as an explicit tensor-construction option.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list with ids already in [0, n). Duplicate edges
    /// are merged keeping the last weight; self-loops and negative weights
    /// are rejected.
    static Graph from_edges(index_t n,
                            std::span<const std::tuple<index_t, index_t, double>> edges);

    index_t n_nodes() const { return n_; }
    std::size_t n_edges() const { return adj_.size() / 2; }  // undirected count

    std::span<const index_t> neighbors(index_t v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::span<const double> weights(index_t v) const {
        return {wts_.data() + offsets_[v], wts_.data() + offsets_[v + 1]};
    }

    std::size_t degree(index_t v) const { return offsets_[v + 1] - offsets_[v]; }

    /// Weighted degree Σ_j w(v, j).
    double strength(index_t v) const { return strength_[v]; }

    /// Σ over all undirected edges of their weight.
    double total_weight() const { return total_weight_; }

    /// Weight of edge (u, v); 0 if absent. Binary search over u's list.
    double edge_weight(index_t u, index_t v) const;

    bool has_edge(index_t u, index_t v) const { return edge_weight(u, v) > 0.0; }

private:
    index_t n_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<index_t> adj_;
    std::vector<double> wts_;
    std::vector<double> strength_;
    double total_weight_ = 0.0;
};

/// A sequence of snapshots over one shared node set.
struct TemporalGraph {
    TemporalGraph(index_t n, std::vector<Graph> snaps);

    index_t n_nodes;
    std::vector<Graph> snapshots;

    index_t t_len() const { return static_cast<index_t>(snapshots.size()); }
};

struct ParseOptions {
    int indexing_base = 0;   // 0 or 1
    bool weighted = false;   // accept an optional third (fourth) weight column
    std::optional<index_t> n_nodes;  // explicit node count; disables id compaction
};

struct ParseReport {
    std::uint64_t duplicate_edges = 0;    // merged, keeping the last weight
    std::uint64_t self_loops_dropped = 0;
};

/// internal id -> original id, plus the inverse lookup used when reading
/// covers that refer to original ids.
struct NodeRemap {
    std::vector<std::int64_t> to_original;
    std::unordered_map<std::int64_t, index_t> to_internal;

    index_t require_internal(std::int64_t original) const;
};

struct ParsedGraph {
    Graph graph;
    NodeRemap remap;
    ParseReport report;
};

struct ParsedTemporalGraph {
    TemporalGraph graph;
    NodeRemap remap;
    ParseReport report;
};

/// Parses "u v [w]" lines; '#' starts a comment, blank lines are skipped.
/// Node ids are normalized to a dense 0-based range (in ascending original-id
/// order) unless an explicit node count pins the id space directly.
ParsedGraph parse_edge_list(std::istream& in, const ParseOptions& opts);

/// Parses "t u v [w]" lines; snapshots share one node set, T = 1 + max t.
ParsedTemporalGraph parse_temporal_edge_list(std::istream& in, const ParseOptions& opts);

struct EgonetEntry {
    index_t i, j;
    double w;
};

/// Adjacency of the subgraph induced by the closed neighborhood N[center]
/// (the center belongs to its own egonet). Entries are directed pairs in
/// (i, j) order; self_loops adds a unit diagonal over N[center].
std::vector<EgonetEntry> egonet(const Graph& g, index_t center, bool self_loops);

}  // namespace egoten
