#pragma once

#include <span>
#include <vector>

#include "numerov/assembly.hpp"

namespace numerov {

struct Eigenpair {
    int mode_index = 0;            // 0-based, ascending energy
    double energy_eV = 0.0;
    std::vector<double> psi;       // physical wavefunction samples, trapezoid-normalized
    std::vector<double> dpsi_dx;   // nm^-1
    std::vector<double> xi;        // PDM auxiliary function (psi = sqrt(m_rel) xi); empty otherwise
};

struct Spectrum {
    std::vector<Eigenpair> pairs;
    SystemKind system_kind = SystemKind::constant_mass;
    Grid grid;

    int size() const { return static_cast<int>(pairs.size()); }
    const Eigenpair& mode(int i) const { return pairs.at(i); }
    std::vector<double> energies() const;
};

/// Lowest n_modes eigenpairs in ascending energy via a dense symmetric
/// eigensolve. Wavefunctions satisfy the Dirichlet boundary, trapezoid
/// normalization and the largest-|psi|-sample-positive sign convention.
Spectrum solve(const HamiltonianSystem& system, int n_modes);

/// Second-order first derivative on the grid (central interior stencils,
/// one-sided at the two endpoints).
std::vector<double> derivative(std::span<const double> psi, const Grid& grid);

/// Rescale so the trapezoid integral of |psi|^2 is 1, then apply the sign
/// convention. Throws ZeroVector for an identically vanishing input.
std::vector<double> normalize(std::span<const double> psi, const Grid& grid);

}
