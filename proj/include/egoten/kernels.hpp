#pragma once

#include <cstddef>

namespace egoten::kernels {

/// The hot inner loops of the toolkit: fused multiply-accumulate row updates
/// used by sparse MTTKRP, Hadamard dot products used by the sparse objective,
/// and the elementwise pieces of the ADMM iterations. Each kernel has a scalar
/// reference implementation and an AVX2 variant; the active table is chosen at
/// runtime from CPU capabilities (override with EGOTEN_KERNELS=scalar|avx2).
struct KernelTable {
    // out[q] += s * x[q]
    void (*axpy)(double* out, const double* x, double s, std::size_t n);
    // out[q] += s * a[q] * b[q]
    void (*hadamard_axpy2)(double* out, const double* a, const double* b, double s, std::size_t n);
    // out[q] += s * a[q] * b[q] * c[q]
    void (*hadamard_axpy3)(double* out, const double* a, const double* b, const double* c,
                           double s, std::size_t n);
    // Σ a[q] b[q]
    double (*dot2)(const double* a, const double* b, std::size_t n);
    // Σ a[q] b[q] c[q]
    double (*dot3)(const double* a, const double* b, const double* c, std::size_t n);
    // Σ a[q] b[q] c[q] d[q]
    double (*dot4)(const double* a, const double* b, const double* c, const double* d,
                   std::size_t n);
    // x[q] = max(x[q], 0)
    void (*relu)(double* x, std::size_t n);
    // Σ x[q]²
    double (*sq_norm)(const double* x, std::size_t n);
    // Σ (x[q] − y[q])²
    double (*sq_dist)(const double* x, const double* y, std::size_t n);
    // out[q] = m[q] + s * (zb[q] − y[q]); the ADMM right-hand side
    void (*combine_rhs)(double* out, const double* m, const double* zb, const double* y,
                        double s, std::size_t n);
};

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);

/// The table the process is currently dispatching to.
const KernelTable& table();
Isa active_isa();

/// Test hook: force a specific implementation. Throws if unsupported here.
void force_isa(Isa isa);

/// Table for a specific ISA (for equivalence tests). Throws if unsupported.
const KernelTable& table_for(Isa isa);

// Convenience wrappers through the active table.
inline void axpy(double* out, const double* x, double s, std::size_t n) {
    table().axpy(out, x, s, n);
}
inline void hadamard_axpy2(double* out, const double* a, const double* b, double s,
                           std::size_t n) {
    table().hadamard_axpy2(out, a, b, s, n);
}
inline void hadamard_axpy3(double* out, const double* a, const double* b, const double* c,
                           double s, std::size_t n) {
    table().hadamard_axpy3(out, a, b, c, s, n);
}
inline double dot2(const double* a, const double* b, std::size_t n) {
    return table().dot2(a, b, n);
}
inline double dot3(const double* a, const double* b, const double* c, std::size_t n) {
    return table().dot3(a, b, c, n);
}
inline double dot4(const double* a, const double* b, const double* c, const double* d,
                   std::size_t n) {
    return table().dot4(a, b, c, d, n);
}
inline void relu(double* x, std::size_t n) { table().relu(x, n); }
inline double sq_norm(const double* x, std::size_t n) { return table().sq_norm(x, n); }
inline double sq_dist(const double* x, const double* y, std::size_t n) {
    return table().sq_dist(x, y, n);
}
inline void combine_rhs(double* out, const double* m, const double* zb, const double* y,
                        double s, std::size_t n) {
    table().combine_rhs(out, m, zb, y, s, n);
}

}  // namespace egoten::kernels
