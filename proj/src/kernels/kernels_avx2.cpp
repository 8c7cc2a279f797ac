// AVX2+FMA variants of the vector kernels. This translation unit is compiled
// with -mavx2 -mfma; dispatch.cpp only installs the table after a runtime
// cpuid check, so no AVX2 instruction executes on unsupported hardware.

#include "kernel_table.hpp"

#if defined(NUMEROV_HAVE_AVX2_TU)

#include <immintrin.h>

namespace numerov::kernels::detail {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum_avx2(const double* a, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(a + i + 4));
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i];
    return acc;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double* x, double factor, std::size_t n) {
    const __m256d vf = _mm256_set1_pd(factor);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), vf));
    }
    for (; i < n; ++i) x[i] *= factor;
}

void tridiagonal_interior_avx2(const double* diag, const double* off,
                               const double* x, double* y, std::size_t n) {
    std::size_t i = 1;
    for (; i + 4 < n; i += 4) {  // i+3 <= n-2  <=>  i+4 < n (+1 slack)
        __m256d acc = _mm256_mul_pd(_mm256_loadu_pd(diag + i), _mm256_loadu_pd(x + i));
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(off + i - 1), _mm256_loadu_pd(x + i - 1), acc);
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(off + i), _mm256_loadu_pd(x + i + 1), acc);
        _mm256_storeu_pd(y + i, acc);
    }
    for (; i + 1 < n; ++i) {
        y[i] = diag[i] * x[i] + off[i - 1] * x[i - 1] + off[i] * x[i + 1];
    }
}

void derivative_interior_avx2(const double* f, double half_inv_dx,
                              double* out, std::size_t n) {
    const __m256d vh = _mm256_set1_pd(half_inv_dx);
    std::size_t i = 1;
    for (; i + 4 < n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(f + i + 1), _mm256_loadu_pd(f + i - 1));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(d, vh));
    }
    for (; i + 1 < n; ++i) out[i] = (f[i + 1] - f[i - 1]) * half_inv_dx;
}

void second_derivative_interior_avx2(const double* f, double inv_dx2,
                                     double* out, std::size_t n) {
    const __m256d vi = _mm256_set1_pd(inv_dx2);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t i = 1;
    for (; i + 4 < n; i += 4) {
        __m256d mid = _mm256_loadu_pd(f + i);
        __m256d s = _mm256_add_pd(_mm256_loadu_pd(f + i - 1), _mm256_loadu_pd(f + i + 1));
        s = _mm256_fnmadd_pd(two, mid, s);
        _mm256_storeu_pd(out + i, _mm256_mul_pd(s, vi));
    }
    for (; i + 1 < n; ++i) out[i] = (f[i - 1] - 2.0 * f[i] + f[i + 1]) * inv_dx2;
}

}  // namespace

const KernelTable avx2_table = {
    dot_avx2,
    sum_avx2,
    axpy_avx2,
    scale_avx2,
    tridiagonal_interior_avx2,
    derivative_interior_avx2,
    second_derivative_interior_avx2,
};

}

#endif  // NUMEROV_HAVE_AVX2_TU
