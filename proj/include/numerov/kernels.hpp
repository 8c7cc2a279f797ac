#pragma once

#include <cstddef>
#include <span>

namespace numerov::kernels {

/// Instruction-set targets for the vector kernels. `scalar` is the reference
/// implementation; wider targets are selected at runtime when the CPU
/// supports them. The NUMEROV_KERNELS environment variable (scalar | avx2 |
/// auto) overrides the automatic choice at process start.
enum class Isa { scalar, avx2 };

Isa active_isa();
const char* isa_name(Isa isa);
bool isa_supported(Isa isa);

/// Switch the live kernel table; throws std::invalid_argument for an
/// unsupported target. Intended for the equivalence tests; not thread-safe
/// against concurrent kernel calls.
void force_isa(Isa isa);

double dot(std::span<const double> a, std::span<const double> b);
double sum(std::span<const double> a);

/// Trapezoid quadrature of uniformly sampled values with spacing dx.
double trapezoid(std::span<const double> values, double dx);

/// y += a * x
void axpy(double a, std::span<const double> x, std::span<double> y);

/// x *= factor
void scale(std::span<double> x, double factor);

/// y = T x for a symmetric tridiagonal T given by its diagonal and single
/// off-diagonal (off.size() == diag.size() - 1).
void tridiagonal_apply(std::span<const double> diag, std::span<const double> off,
                       std::span<const double> x, std::span<double> y);

/// Second-order first derivative of uniformly sampled f: central stencils in
/// the interior, one-sided second-order stencils at the two endpoints.
void derivative(std::span<const double> f, double dx, std::span<double> out);

/// Second-order second derivative, same stencil policy (needs >= 4 samples).
void second_derivative(std::span<const double> f, double dx, std::span<double> out);

}
