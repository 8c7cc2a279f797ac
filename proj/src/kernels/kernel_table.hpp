#pragma once

#include <cstddef>

namespace numerov::kernels::detail {

// Raw-pointer kernel entry points. Each target fills one table; the public
// API in dispatch.cpp validates arguments and routes through the live table.
// Interior ranges exclude the endpoint stencils, which stay scalar in the
// front-end (they touch a handful of samples).
struct KernelTable {
    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*sum)(const double* a, std::size_t n);
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    void (*scale)(double* x, double factor, std::size_t n);
    // y[i] = d[i] x[i] + off[i-1] x[i-1] + off[i] x[i+1] for i in [1, n-2]
    void (*tridiagonal_interior)(const double* diag, const double* off,
                                 const double* x, double* y, std::size_t n);
    // out[i] = (f[i+1] - f[i-1]) * half_inv_dx for i in [1, n-2]
    void (*derivative_interior)(const double* f, double half_inv_dx,
                                double* out, std::size_t n);
    // out[i] = (f[i-1] - 2 f[i] + f[i+1]) * inv_dx2 for i in [1, n-2]
    void (*second_derivative_interior)(const double* f, double inv_dx2,
                                       double* out, std::size_t n);
};

extern const KernelTable scalar_table;
#if defined(NUMEROV_HAVE_AVX2_TU)
extern const KernelTable avx2_table;
#endif

}
