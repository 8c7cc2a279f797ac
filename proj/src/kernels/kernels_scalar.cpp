#include "kernel_table.hpp"

namespace numerov::kernels::detail {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double* x, double factor, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= factor;
}

void tridiagonal_interior_scalar(const double* diag, const double* off,
                                 const double* x, double* y, std::size_t n) {
    for (std::size_t i = 1; i + 1 < n; ++i) {
        y[i] = diag[i] * x[i] + off[i - 1] * x[i - 1] + off[i] * x[i + 1];
    }
}

void derivative_interior_scalar(const double* f, double half_inv_dx,
                                double* out, std::size_t n) {
    for (std::size_t i = 1; i + 1 < n; ++i) {
        out[i] = (f[i + 1] - f[i - 1]) * half_inv_dx;
    }
}

void second_derivative_interior_scalar(const double* f, double inv_dx2,
                                       double* out, std::size_t n) {
    for (std::size_t i = 1; i + 1 < n; ++i) {
        out[i] = (f[i - 1] - 2.0 * f[i] + f[i + 1]) * inv_dx2;
    }
}

}  // namespace

const KernelTable scalar_table = {
    dot_scalar,
    sum_scalar,
    axpy_scalar,
    scale_scalar,
    tridiagonal_interior_scalar,
    derivative_interior_scalar,
    second_derivative_interior_scalar,
};

}
