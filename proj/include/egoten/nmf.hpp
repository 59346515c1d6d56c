#pragma once

#include "egoten/graph.hpp"
#include "egoten/solver.hpp"

namespace egoten {

struct NmfResult {
    Matrix u, v;  // N×K each; rows of U on the simplex, V nonnegative
    SolverTrace trace;
};

/// Matrix baseline: min ‖W − U Vᵀ‖²_F over U, V ≥ 0 with rows of U on the
/// probability simplex, where W is the (symmetric) adjacency matrix.
/// Alternates the same ADMM sub-solvers used for the tensor model; the trace
/// records the plain residual. self_loops adds a unit diagonal to W.
NmfResult nmf_decompose(const Graph& g, const SolverConfig& cfg, bool self_loops = false);

}  // namespace egoten
