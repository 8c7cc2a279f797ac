#pragma once

#include <span>
#include <vector>

#include "numerov/grid.hpp"
#include "numerov/potentials.hpp"

namespace numerov {

/// Symmetric tridiagonal matrix; only the diagonal and one off-diagonal are
/// stored, so symmetry holds by construction.
struct TridiagonalSymmetric {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;  // size == diagonal.size() - 1

    int dim() const { return static_cast<int>(diagonal.size()); }
    void apply(std::span<const double> x, std::span<double> y) const;
};

/// Column-major dense square matrix (LAPACK layout).
struct DenseMatrix {
    int n = 0;
    std::vector<double> a;

    static DenseMatrix zero(int n);
    double& at(int i, int j) { return a[static_cast<std::size_t>(j) * n + i]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(j) * n + i]; }
};

enum class SystemKind { constant_mass, position_dependent_mass };

/// Assembled stencil system on the interior samples of a grid; psi = 0 at
/// both grid ends is implicit in the truncation (the infinite-well walls are
/// realized exactly this way).
struct HamiltonianSystem {
    SystemKind kind = SystemKind::constant_mass;
    TridiagonalSymmetric a;          // second-difference stencil / dx^2, nm^-2
    TridiagonalSymmetric b;          // (1, 10, 1)/12 weighting, dimensionless
    std::vector<double> v_diag;      // eV, interior samples
    std::vector<double> m_rel_diag;  // dimensionless, interior samples
    Grid grid;

    int dim() const { return a.dim(); }
};

/// Second-difference stencil: diagonal -2/dx^2, off-diagonal 1/dx^2.
TridiagonalSymmetric build_A(const Grid& grid);

/// (1, 10, 1)/12 weighting: diagonal 10/12, off-diagonal 1/12. Strictly
/// diagonally dominant with positive diagonal, hence positive definite.
TridiagonalSymmetric build_B(const Grid& grid);

/// Constant-mass system for H = -(hbar^2/2m) B^{-1} A + diag(V).
/// v_samples covers the full grid (n_points values, eV); m_rel > 0.
HamiltonianSystem assemble_constant_mass(const Grid& grid, std::span<const double> v_samples,
                                         double m_rel);

/// Effective potential for the position-dependent-mass transformation:
///   V_eff = V - [ hbar^2 (1+r) m'' / (4 m^2) - hbar^2 (3/4 + s/2) m'^2 / (2 m^3) ]
/// with m = m_rel * m_e; the ordering parameters (r, s) are taken directly.
/// (r, s) = (-1, -3/2) gives V_eff = V identically.
std::vector<double> effective_potential(std::span<const double> v_samples,
                                        const MassProfileSpec& profile, const Grid& grid,
                                        double r, double s);

/// Position-dependent-mass system for [-(hbar^2/2me) M^{-1} A + diag(V_eff)],
/// where M = B * diag(m_rel).
HamiltonianSystem assemble_pdm(const Grid& grid, std::span<const double> v_eff_samples,
                               std::span<const double> m_rel_samples);

/// Dense symmetric matrix whose ordinary eigenproblem reproduces the system.
/// Constant mass: -(hbar^2/2m) B^{-1}A + diag(V). PDM: the mass-similarity
/// symmetrization D^{-1/2} (-(hbar^2/2me) B^{-1}A) D^{-1/2} + diag(V_eff)
/// with D = diag(m_rel).
DenseMatrix dense_hamiltonian(const HamiltonianSystem& system);

/// Dense M = B * diag(m_rel) of a PDM system (structural checks, plots).
DenseMatrix dense_pdm_mass_matrix(const HamiltonianSystem& system);

}
