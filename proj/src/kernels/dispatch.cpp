#include "numerov/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "kernel_table.hpp"

namespace numerov::kernels {

namespace {

using detail::KernelTable;

bool cpu_has_avx2() {
#if defined(NUMEROV_HAVE_AVX2_TU) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable* table_for(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return &detail::scalar_table;
        case Isa::avx2:
#if defined(NUMEROV_HAVE_AVX2_TU)
            return &detail::avx2_table;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

struct Dispatch {
    const KernelTable* table;
    Isa isa;

    Dispatch() {
        Isa pick = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
        if (const char* env = std::getenv("NUMEROV_KERNELS")) {
            if (std::strcmp(env, "scalar") == 0) {
                pick = Isa::scalar;
            } else if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) {
                pick = Isa::avx2;
            }
            // anything else (including "auto") keeps the detected target
        }
        isa = pick;
        table = table_for(pick);
    }
};

Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

const KernelTable& table() { return *dispatch().table; }

void check_equal_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string("kernel size mismatch in ") + what);
}

}  // namespace

Isa active_isa() { return dispatch().isa; }

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "?";
}

bool isa_supported(Isa isa) { return table_for(isa) != nullptr && (isa != Isa::avx2 || cpu_has_avx2()); }

void force_isa(Isa isa) {
    if (!isa_supported(isa)) {
        throw std::invalid_argument(std::string("kernel target not supported: ") + isa_name(isa));
    }
    dispatch().isa = isa;
    dispatch().table = table_for(isa);
}

double dot(std::span<const double> a, std::span<const double> b) {
    check_equal_size(a.size(), b.size(), "dot");
    return table().dot(a.data(), b.data(), a.size());
}

double sum(std::span<const double> a) { return table().sum(a.data(), a.size()); }

double trapezoid(std::span<const double> values, double dx) {
    if (values.size() < 2) return 0.0;
    return dx * (table().sum(values.data(), values.size()) -
                 0.5 * (values.front() + values.back()));
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    check_equal_size(x.size(), y.size(), "axpy");
    table().axpy(a, x.data(), y.data(), x.size());
}

void scale(std::span<double> x, double factor) { table().scale(x.data(), factor, x.size()); }

void tridiagonal_apply(std::span<const double> diag, std::span<const double> off,
                       std::span<const double> x, std::span<double> y) {
    const std::size_t n = diag.size();
    check_equal_size(x.size(), n, "tridiagonal_apply x");
    check_equal_size(y.size(), n, "tridiagonal_apply y");
    check_equal_size(off.size(), n > 0 ? n - 1 : 0, "tridiagonal_apply off");
    if (n == 0) return;
    if (n == 1) {
        y[0] = diag[0] * x[0];
        return;
    }
    y[0] = diag[0] * x[0] + off[0] * x[1];
    y[n - 1] = diag[n - 1] * x[n - 1] + off[n - 2] * x[n - 2];
    if (n > 2) table().tridiagonal_interior(diag.data(), off.data(), x.data(), y.data(), n);
}

void derivative(std::span<const double> f, double dx, std::span<double> out) {
    const std::size_t n = f.size();
    check_equal_size(out.size(), n, "derivative");
    if (n < 3) throw std::invalid_argument("derivative needs at least 3 samples");
    const double half_inv = 0.5 / dx;
    table().derivative_interior(f.data(), half_inv, out.data(), n);
    out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * half_inv;
    out[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * half_inv;
}

void second_derivative(std::span<const double> f, double dx, std::span<double> out) {
    const std::size_t n = f.size();
    check_equal_size(out.size(), n, "second_derivative");
    if (n < 4) throw std::invalid_argument("second_derivative needs at least 4 samples");
    const double inv_dx2 = 1.0 / (dx * dx);
    table().second_derivative_interior(f.data(), inv_dx2, out.data(), n);
    out[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) * inv_dx2;
    out[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) * inv_dx2;
}

}
