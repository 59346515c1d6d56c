#pragma once

#include <cstddef>

#include "egoten/matrix.hpp"

namespace egoten {

/// Euclidean projection of one row onto the nonnegative orthant (in place).
void project_nonneg_row(double* x, std::size_t k);

/// Euclidean projection of one row onto the probability simplex
/// {x : x ≥ 0, Σ x = 1} (in place). Sort-based exact algorithm.
void project_simplex_row(double* x, std::size_t k);

/// Entrywise max(·, 0) applied to every entry.
Matrix project_nonneg(Matrix m);

/// Projects every row onto the probability simplex.
Matrix project_simplex_rows(Matrix m);

}  // namespace egoten
