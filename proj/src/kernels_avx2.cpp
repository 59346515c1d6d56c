// AVX2+FMA kernel variants. This translation unit is the only one compiled
// with -mavx2 -mfma; nothing here runs unless the dispatcher has confirmed
// CPU support at runtime.
#include "egoten/kernels.hpp"

#if defined(EGOTEN_COMPILE_AVX2)

#include <cmath>
#include <immintrin.h>

namespace egoten::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void v_axpy(double* out, const double* x, double s, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t q = 0;
    for (; q + 4 <= n; q += 4) {
        __m256d o = _mm256_loadu_pd(out + q);
        o = _mm256_fmadd_pd(vs, _mm256_loadu_pd(x + q), o);
        _mm256_storeu_pd(out + q, o);
    }
    for (; q < n; ++q) out[q] = std::fma(s, x[q], out[q]);
}

void v_hadamard_axpy2(double* out, const double* a, const double* b, double s, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t q = 0;
    for (; q + 4 <= n; q += 4) {
        const __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a + q), _mm256_loadu_pd(b + q));
        __m256d o = _mm256_loadu_pd(out + q);
        o = _mm256_fmadd_pd(vs, ab, o);
        _mm256_storeu_pd(out + q, o);
    }
    for (; q < n; ++q) out[q] = std::fma(s, a[q] * b[q], out[q]);
}

void v_hadamard_axpy3(double* out, const double* a, const double* b, const double* c, double s,
                      std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t q = 0;
    for (; q + 4 <= n; q += 4) {
        __m256d abc = _mm256_mul_pd(_mm256_loadu_pd(a + q), _mm256_loadu_pd(b + q));
        abc = _mm256_mul_pd(abc, _mm256_loadu_pd(c + q));
        __m256d o = _mm256_loadu_pd(out + q);
        o = _mm256_fmadd_pd(vs, abc, o);
        _mm256_storeu_pd(out + q, o);
    }
    for (; q < n; ++q) out[q] = std::fma(s, (a[q] * b[q]) * c[q], out[q]);
}

double v_dot2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t q = 0;
    for (; q + 4 <= n; q += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + q), _mm256_loadu_pd(b + q), acc);
    double r = hsum(acc);
    for (; q < n; ++q) r += a[q] * b[q];
    return r;
}

double v_dot3(const double* a, const double* b, const double* c, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t q = 0;
    for (; q + 4 <= n; q += 4) {
        const __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a + q), _mm256_loadu_pd(b + q));
        acc = _mm256_fmadd_pd(ab, _mm256_loadu_pd(c + q), acc);
    }
    double r = hsum(acc);
    for (; q < n; ++q) r += a[q] * b[q] * c[q];
    return r;
}

double v_dot4(const double* a, const double* b, const double* c, const double* d, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t q = 0;
    for (; q + 4 <= n; q += 4) {
        const __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a + q), _mm256_loadu_pd(b + q));
        const __m256d cd = _mm256_mul_pd(_mm256_loadu_pd(c + q), _mm256_loadu_pd(d + q));
        acc = _mm256_fmadd_pd(ab, cd, acc);
    }
    double r = hsum(acc);
    for (; q < n; ++q) r += a[q] * b[q] * c[q] * d[q];
    return r;
}

void v_relu(double* x, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t q = 0;
    for (; q + 4 <= n; q += 4)
        _mm256_storeu_pd(x + q, _mm256_max_pd(_mm256_loadu_pd(x + q), zero));
    for (; q < n; ++q) x[q] = x[q] > 0.0 ? x[q] : 0.0;
}

double v_sq_norm(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t q = 0;
    for (; q + 4 <= n; q += 4) {
        const __m256d v = _mm256_loadu_pd(x + q);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double r = hsum(acc);
    for (; q < n; ++q) r += x[q] * x[q];
    return r;
}

double v_sq_dist(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t q = 0;
    for (; q + 4 <= n; q += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + q), _mm256_loadu_pd(y + q));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double r = hsum(acc);
    for (; q < n; ++q) {
        const double d = x[q] - y[q];
        r += d * d;
    }
    return r;
}

void v_combine_rhs(double* out, const double* m, const double* zb, const double* y, double s,
                   std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t q = 0;
    for (; q + 4 <= n; q += 4) {
        const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(zb + q), _mm256_loadu_pd(y + q));
        _mm256_storeu_pd(out + q, _mm256_fmadd_pd(vs, diff, _mm256_loadu_pd(m + q)));
    }
    for (; q < n; ++q) out[q] = std::fma(s, zb[q] - y[q], m[q]);
}

const KernelTable kAvx2Table = {
    v_axpy, v_hadamard_axpy2, v_hadamard_axpy3, v_dot2,    v_dot3,
    v_dot4, v_relu,           v_sq_norm,        v_sq_dist, v_combine_rhs,
};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2Table; }

}  // namespace egoten::kernels

#else  // !EGOTEN_COMPILE_AVX2

namespace egoten::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace egoten::kernels

#endif
