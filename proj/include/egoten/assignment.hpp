#pragma once

#include <optional>
#include <vector>

#include "egoten/matrix.hpp"

namespace egoten {

/// A set of communities over nodes [0, n). Community node lists are sorted;
/// empty communities are never stored. Overlap is allowed.
struct Cover {
    std::vector<std::vector<index_t>> communities;
    index_t n_nodes = 0;
    std::optional<Matrix> soft;  // the membership matrix it was derived from, if any

    std::size_t size() const { return communities.size(); }
    void validate() const;

    /// True when the communities are pairwise disjoint and jointly cover all
    /// nodes, i.e. form a partition.
    bool is_disjoint_partition() const;
};

/// One community per node: argmax over the membership row, ties resolved to
/// the lowest column index. Empty columns are dropped.
Cover hard_assign(const Matrix& c);

/// Crisp overlapping cover: node n joins community k iff c(n, k) > tau
/// (strictly). A node whose whole row is ≤ tau falls back to its argmax
/// community; strict mode leaves such nodes unassigned instead.
Cover crisp_cover(const Matrix& c, double tau, bool strict = false);

}  // namespace egoten
