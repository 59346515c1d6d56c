#include "egoten/projections.hpp"

#include <algorithm>
#include <vector>

#include "egoten/kernels.hpp"

namespace egoten {

void project_nonneg_row(double* x, std::size_t k) { kernels::relu(x, k); }

// Sort the row descending, find the largest prefix whose shifted values stay
// positive, then clamp. O(k log k), exact up to round-off.
void project_simplex_row(double* x, std::size_t k) {
    if (k == 0) return;
    if (k == 1) {
        x[0] = 1.0;
        return;
    }
    thread_local std::vector<double> sorted;
    sorted.assign(x, x + k);
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());

    double running = sorted[0] - 1.0;  // Σ of the prefix minus the target sum
    double theta = running;            // θ for prefix size 1
    for (std::size_t p = 1; p < k; ++p) {
        running += sorted[p];
        const double t = running / static_cast<double>(p + 1);
        if (t >= sorted[p]) break;  // entries from here on project to zero
        theta = t;
    }
    for (std::size_t q = 0; q < k; ++q) {
        const double v = x[q] - theta;
        x[q] = v > 0.0 ? v : 0.0;
    }
}

Matrix project_nonneg(Matrix m) {
    kernels::relu(m.data(), m.size());
    return m;
}

Matrix project_simplex_rows(Matrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i) project_simplex_row(m.row(i), m.cols());
    return m;
}

}  // namespace egoten
