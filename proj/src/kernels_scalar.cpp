#include <cmath>

#include "egoten/kernels.hpp"

// The elementwise updates go through std::fma with the same factor grouping
// the simd lanes use, so both tables round identically and the dispatch is
// bit-for-bit transparent.
namespace egoten::kernels {
namespace {

void s_axpy(double* out, const double* x, double s, std::size_t n) {
    for (std::size_t q = 0; q < n; ++q) out[q] = std::fma(s, x[q], out[q]);
}

void s_hadamard_axpy2(double* out, const double* a, const double* b, double s, std::size_t n) {
    for (std::size_t q = 0; q < n; ++q) out[q] = std::fma(s, a[q] * b[q], out[q]);
}

void s_hadamard_axpy3(double* out, const double* a, const double* b, const double* c, double s,
                      std::size_t n) {
    for (std::size_t q = 0; q < n; ++q) out[q] = std::fma(s, (a[q] * b[q]) * c[q], out[q]);
}

double s_dot2(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t q = 0; q < n; ++q) acc += a[q] * b[q];
    return acc;
}

double s_dot3(const double* a, const double* b, const double* c, std::size_t n) {
    double acc = 0.0;
    for (std::size_t q = 0; q < n; ++q) acc += a[q] * b[q] * c[q];
    return acc;
}

double s_dot4(const double* a, const double* b, const double* c, const double* d, std::size_t n) {
    double acc = 0.0;
    for (std::size_t q = 0; q < n; ++q) acc += a[q] * b[q] * c[q] * d[q];
    return acc;
}

void s_relu(double* x, std::size_t n) {
    for (std::size_t q = 0; q < n; ++q) x[q] = x[q] > 0.0 ? x[q] : 0.0;
}

double s_sq_norm(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t q = 0; q < n; ++q) acc += x[q] * x[q];
    return acc;
}

double s_sq_dist(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t q = 0; q < n; ++q) {
        const double d = x[q] - y[q];
        acc += d * d;
    }
    return acc;
}

void s_combine_rhs(double* out, const double* m, const double* zb, const double* y, double s,
                   std::size_t n) {
    for (std::size_t q = 0; q < n; ++q) out[q] = std::fma(s, zb[q] - y[q], m[q]);
}

}  // namespace

extern const KernelTable kScalarTable = {
    s_axpy, s_hadamard_axpy2, s_hadamard_axpy3, s_dot2,    s_dot3,
    s_dot4, s_relu,           s_sq_norm,        s_sq_dist, s_combine_rhs,
};

}  // namespace egoten::kernels
