#pragma once

namespace numerov::units {

// CODATA 2018 values. The repo-wide unit system is fixed: lengths in nm,
// energies in eV, masses as the dimensionless ratio m_rel = m/m_e, angular
// frequencies in s^-1. With these choices the stencil matrix entries stay
// near unity for nm-scale wells.
inline constexpr double hbar_J_s = 1.054571817e-34;
inline constexpr double electron_mass_kg = 9.1093837015e-31;
inline constexpr double eV_J = 1.602176634e-19;
inline constexpr double nm_m = 1e-9;

/// hbar^2 / (2 m_e) expressed in eV nm^2 (~0.0381).
inline constexpr double hbar2_over_2me_eV_nm2 =
    hbar_J_s * hbar_J_s / (2.0 * electron_mass_kg * eV_J * nm_m * nm_m);

/// hbar in eV s (~6.582e-16).
inline constexpr double hbar_eV_s = hbar_J_s / eV_J;

struct PhysicalConstants {
    double hbar2_over_2me = hbar2_over_2me_eV_nm2;  // eV nm^2
    double hbar_eV_s_ = hbar_eV_s;                  // eV s
};

inline constexpr PhysicalConstants codata{};

/// Oscillator quantum hbar*omega in eV for omega in s^-1.
inline constexpr double energy_quantum_eV(double omega_per_s) {
    return hbar_eV_s * omega_per_s;
}

}
