#include "egoten/matrix.hpp"

#include <cmath>

namespace egoten {

Matrix gram(const Matrix& x) {
    const std::size_t n = x.rows(), k = x.cols();
    Matrix g(k, k);
    for (std::size_t i = 0; i < n; ++i) {
        const double* r = x.row(i);
        for (std::size_t p = 0; p < k; ++p) {
            const double rp = r[p];
            if (rp == 0.0) continue;
            double* gp = g.row(p);
            for (std::size_t q = p; q < k; ++q) gp[q] += rp * r[q];
        }
    }
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < p; ++q) g(p, q) = g(q, p);
    return g;
}

void hadamard_inplace(Matrix& g, const Matrix& h) {
    if (!g.same_shape(h)) throw Error("hadamard_inplace: shape mismatch");
    double* a = g.data();
    const double* b = h.data();
    for (std::size_t i = 0; i < g.size(); ++i) a[i] *= b[i];
}

double frobenius_norm_sq(const Matrix& m) {
    double s = 0.0;
    const double* p = m.data();
    for (std::size_t i = 0; i < m.size(); ++i) s += p[i] * p[i];
    return s;
}

double frobenius_norm(const Matrix& m) { return std::sqrt(frobenius_norm_sq(m)); }

double sum_all(const Matrix& m) {
    double s = 0.0;
    const double* p = m.data();
    for (std::size_t i = 0; i < m.size(); ++i) s += p[i];
    return s;
}

double rel_change(const Matrix& next, const Matrix& prev) {
    if (!next.same_shape(prev)) throw Error("rel_change: shape mismatch");
    double num = 0.0, den = 0.0;
    const double* a = next.data();
    const double* b = prev.data();
    for (std::size_t i = 0; i < next.size(); ++i) {
        const double d = a[i] - b[i];
        num += d * d;
        den += b[i] * b[i];
    }
    return std::sqrt(num) / std::max(std::sqrt(den), 1e-30);
}

Cholesky::Cholesky(const Matrix& spd) : l_(spd.rows(), spd.cols()) {
    const std::size_t k = spd.rows();
    if (spd.cols() != k) throw Error("Cholesky: matrix not square");
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = spd(i, j);
            for (std::size_t p = 0; p < j; ++p) s -= l_(i, p) * l_(j, p);
            if (i == j) {
                if (!(s > 0.0))
                    throw SolverError("Cholesky: matrix not positive definite (pivot " +
                                      std::to_string(s) + "); the regularized Gram requires "
                                      "lambda > 0 or a nonzero rho");
                l_(i, i) = std::sqrt(s);
            } else {
                l_(i, j) = s / l_(j, j);
            }
        }
    }
}

void Cholesky::solve_row_inplace(double* x) const {
    const std::size_t k = l_.rows();
    for (std::size_t i = 0; i < k; ++i) {
        double s = x[i];
        const double* li = l_.row(i);
        for (std::size_t p = 0; p < i; ++p) s -= li[p] * x[p];
        x[i] = s / li[i];
    }
    for (std::size_t i = k; i-- > 0;) {
        double s = x[i];
        for (std::size_t p = i + 1; p < k; ++p) s -= l_(p, i) * x[p];
        x[i] = s / l_(i, i);
    }
}

}  // namespace egoten
