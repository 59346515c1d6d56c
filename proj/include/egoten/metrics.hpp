#pragma once

#include <span>
#include <vector>

#include "egoten/assignment.hpp"
#include "egoten/graph.hpp"

namespace egoten {

/// Shannon normalized mutual information 2·I/(H(truth)+H(pred)) over two
/// disjoint partitions of the same node set (natural log, 0·log 0 = 0).
/// Overlapping covers are rejected; use overlapping_nmi for those. Two
/// identical single-community partitions score 1.0 by convention.
double nmi(const Cover& truth, const Cover& pred);

/// Overlapping-cover NMI over per-community binary membership variables:
/// mutual information with best-match conditional entropies, normalized by
/// the larger of the two total membership entropies. Symmetric, in [0, 1],
/// and 1.0 for identical covers.
double overlapping_nmi(const Cover& truth, const Cover& pred);

/// Average F1: for each true community, the best F1 over predicted
/// communities, averaged over true communities. The symmetric flag averages
/// that score with the same measure taken in the other direction.
double avg_f1(const Cover& truth, const Cover& pred, bool symmetric = false);

/// Conductance cut(C)/min(vol(C), vol(V∖C)) with weighted degrees; 0 for an
/// isolated community with no cut edges. Empty and all-node communities are
/// rejected.
double conductance(const Graph& g, std::span<const index_t> community);

/// Size-weighted average Σ_k (|C_k|/N)·φ(C_k) over the cover as given
/// (shared nodes count once per community they belong to).
double avg_conductance(const Graph& g, const Cover& cover);

struct CoveragePoint {
    double nu;
    double coverage;
};

/// coverage(ν) = fraction of nodes in at least one community with
/// conductance strictly below ν, evaluated on an ascending grid in [0, 1].
std::vector<CoveragePoint> coverage_curve(const Graph& g, const Cover& cover,
                                          std::span<const double> nu_grid);

/// Area under the conductance-coverage curve: the lower-left staircase
/// envelope of (coverage, ν) points integrated over coverage ∈ [0, 1], with
/// the final coverage extended to 1 at ν = 1. Lower is better.
double auc(std::span<const CoveragePoint> curve);

}  // namespace egoten
