#pragma once

#include <limits>
#include <string>
#include <vector>

#include "numerov/eigensolve.hpp"
#include "numerov/potentials.hpp"

namespace numerov {

/// Derivative-jump check at a pseudo-delta barrier: an eigenfunction of
/// V(x) + alpha*delta(x - x0) must satisfy
///   psi'(x0+) - psi'(x0-) = (2 m alpha / hbar^2) psi(x0).
struct JumpCheck {
    double barrier_center_nm = 0.0;
    double g1 = 0.0;            // psi'(x0+) - psi'(x0-), estimated outside the support
    double g2 = 0.0;            // (2 m alpha / hbar^2) psi(x0) in eV/nm units
    double abs_residual = 0.0;  // |g1 - g2|
    double rel_residual = 0.0;  // |g1 - g2| / max(|g1|, |g2|, floor)
};

/// One-sided derivatives are estimated from the 3 samples immediately outside
/// the barrier support on each side (second-order extrapolation to the
/// center); the regularized interior never contaminates the estimate.
/// Requires a rectangular barrier sampled on this grid; m_rel is the mass
/// ratio at the barrier (the local value for position-dependent mass).
JumpCheck jump_residual(const Eigenpair& pair, const PseudoDeltaSpec& barrier, const Grid& grid,
                        double m_rel);

/// Even-mode quantization of the centered delta barrier in an infinite well
/// of half-width L: tan(kL) = -(hbar^2/(m alpha)) k  (Griffiths, ch. 2).
struct EvenModeQuantization {
    double k_per_nm = 0.0;
    double f1 = 0.0;                // tan(kL)
    double f2 = 0.0;                // -(hbar^2/(m alpha)) k
    double residual_bounded = 0.0;  // in [0, 1]; 0 exactly where the condition holds
};

/// residual_bounded uses the pole-free form
///   |m_rel alpha sin(kL) + 2 h2 k cos(kL)| / (|m_rel alpha sin(kL)| + |2 h2 k cos(kL)|)
/// so residuals stay comparable across modes and never blow up at tan poles.
EvenModeQuantization even_mode_quantization_residual(double energy_eV, double l_half_nm,
                                                     double m_rel, double alpha_eV_nm);

/// First-order perturbation estimate E_n + alpha |phi_n(x0)|^2 from a
/// barrier-free eigenpair.
double first_order_energy_shift(const Eigenpair& base_pair, double alpha_eV_nm, double x0_nm,
                                const Grid& grid);

/// Truncated spectral restriction 1/alpha = sum_n |phi_n(x0)|^2 / (E - E_n).
struct SpectralSumCheck {
    double partial_sum = 0.0;  // (eV nm)^-1
    double target = 0.0;       // 1/alpha
    double gap = 0.0;          // |partial_sum - 1/alpha| * |alpha|, dimensionless
};

SpectralSumCheck spectral_sum_check(const Spectrum& base, double energy_eV, double alpha_eV_nm,
                                    double x0_nm, int n_terms);

/// Expansion of a perturbed eigenfunction over the barrier-free basis with
/// coefficients c_m = alpha phi_m(x0) psi(x0) / (E - E_m), plus the
/// normalization identity alpha^2 |psi(x0)|^2 sum |phi_n(x0)|^2/(E-E_n)^2 = 1.
struct ExpansionReconstruction {
    std::vector<double> coefficients;
    double l2_error = 0.0;              // trapezoid norm of (psi - sum c_m phi_m)
    double norm_check = 0.0;            // should approach 1 as terms increase
    bool used_direct_projection = false;  // psi(x0) ~ 0 fallback (unchanged odd modes)
};

ExpansionReconstruction expansion_reconstruction(const Spectrum& base, const Eigenpair& perturbed,
                                                 double alpha_eV_nm, double x0_nm);

/// Parity of a mode about the center of a symmetric grid.
enum class Parity { even, odd, asymmetric };
Parity mode_parity(const Eigenpair& pair, const Grid& grid);

/// Indices of modes with the requested parity, in ascending energy order.
std::vector<int> modes_with_parity(const Spectrum& spectrum, Parity parity);

// ---------------------------------------------------------------------------
// Aggregated validation report
// ---------------------------------------------------------------------------

/// Thresholds for the pass/fail columns of a validation report; infinity
/// marks a check as informational (always reported, never failing).
struct ValidationThresholds {
    double jump_rel_max = 0.08;
    double jump_abs_floor = 1e-6;
    double even_mode_residual_max = 0.15;
    double spectral_gap_max = std::numeric_limits<double>::infinity();
    double expansion_l2_max = std::numeric_limits<double>::infinity();
    double norm_check_tol = std::numeric_limits<double>::infinity();
};

struct ValidationCheck {
    std::string name;
    int mode_1based = 0;  // 0 when not mode-specific
    double value = 0.0;
    double threshold = std::numeric_limits<double>::infinity();
    bool passed = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    int n_failed() const;
    bool all_passed() const { return n_failed() == 0; }
};

struct ValidationOptions {
    int n_check_modes = 15;
    std::vector<int> spectral_terms = {25, 50, 100, 200};
    ValidationThresholds thresholds;
};

/// Runs every applicable analytic check on a solved barrier system against
/// its barrier-free reference. The even-mode quantization rows need an
/// infinite well with a single centered barrier and constant mass; they are
/// skipped otherwise. m_rel_samples covers the full grid.
ValidationReport build_validation_report(const Spectrum& with_barriers, const Spectrum& base,
                                         const PotentialSpec& potential,
                                         std::span<const double> m_rel_samples,
                                         const ValidationOptions& options);

}
