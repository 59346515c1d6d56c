#pragma once

#include <cstddef>
#include <vector>

#include "egoten/common.hpp"

namespace egoten {

/// Dense row-major matrix of doubles. Rows are contiguous so the SIMD kernels
/// can operate on them directly.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    void fill(double v) { data_.assign(data_.size(), v); }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

/// XᵀX of an N×K matrix, returned as K×K (symmetric, PSD).
Matrix gram(const Matrix& x);

/// g ∘= h, entrywise. Shapes must match.
void hadamard_inplace(Matrix& g, const Matrix& h);

double frobenius_norm_sq(const Matrix& m);
double frobenius_norm(const Matrix& m);
double sum_all(const Matrix& m);

/// ‖next − prev‖_F / max(‖prev‖_F, tiny); the relative-change measure used by
/// every stopping rule in the solvers.
double rel_change(const Matrix& next, const Matrix& prev);

/// Lower-triangular Cholesky factorization of a small symmetric positive
/// definite matrix, factored once per sub-solve and reused for every row.
class Cholesky {
public:
    explicit Cholesky(const Matrix& spd);

    std::size_t dim() const { return l_.rows(); }

    /// Solves (L Lᵀ) z = x in place; x has dim() entries.
    void solve_row_inplace(double* x) const;

private:
    Matrix l_;
};

}  // namespace egoten
