#pragma once

#include <optional>
#include <string>
#include <vector>

#include "numerov/delta_analysis.hpp"

namespace numerov {

/// One solve within a scenario: a barrier subset and a mass toggle.
/// variable_mass = false freezes the mass at the scenario's harmonic
/// reference value (constant-mass comparison variants).
struct VariantSpec {
    std::string label;
    std::vector<int> barrier_indices;
    bool variable_mass = true;
};

enum class WavefunctionSelection { all, none, listed };

struct OutputOptions {
    std::string dir;  // empty: resolved by the CLI (flag or NUMEROV_OUT_DIR)
    WavefunctionSelection wavefunctions = WavefunctionSelection::all;
    std::vector<int> wavefunction_modes_1based;
    bool write_potential = true;
};

struct SweepSpec {
    std::string parameter;  // "epsilon" | "alpha" | "n_points"
    std::vector<double> values;
    int barrier_index = 0;
    std::optional<PseudoDeltaShape> shape;  // barrier shape override for epsilon sweeps
};

struct ScenarioConfig {
    std::string name;
    double x_min_nm = 0.0;
    double x_max_nm = 0.0;
    int n_points = 0;
    PotentialSpec potential;
    MassProfileSpec mass = ConstantMass{1.0};
    /// Mass ratio entering the harmonic curvature and the constant-mass
    /// variants; <= 0 means "use the mass profile at the grid center".
    double harmonic_mass_m_rel = 0.0;
    /// von Roos ordering parameters for position-dependent mass; the default
    /// (-1, -3/2) makes the effective potential equal the bare one.
    double pdm_r = -1.0;
    double pdm_s = -1.5;
    int n_modes = 10;
    std::vector<VariantSpec> variants;  // empty: derived from barriers/mass
    ValidationOptions validation;
    std::optional<SweepSpec> sweep;
    OutputOptions output;

    Grid grid() const { return make_grid(x_min_nm, x_max_nm, n_points); }
};

struct LabeledSpectrum {
    std::string label;
    Spectrum spectrum;
};

/// Mode-by-mode energy columns plus per-column first differences, which
/// expose how the barriers break the smooth (parabolic or linear) spacing.
struct ComparisonTable {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> energies;           // [mode][column] eV
    std::vector<std::vector<double>> first_differences;  // [mode][column] eV
};

ComparisonTable compare_energies(const std::vector<LabeledSpectrum>& spectra);

struct ScenarioRunOptions {
    bool with_validation = false;
};

struct ScenarioResult {
    std::vector<LabeledSpectrum> spectra;  // one per variant, config order
    std::optional<ValidationReport> validation;
    ComparisonTable table;
    Grid grid;
    std::vector<double> primary_potential;  // sampled V of the first variant, eV
};

/// Solve every variant of the scenario, compare energies and (optionally)
/// validate the first barrier variant against its barrier-free counterpart.
ScenarioResult run_scenario(const ScenarioConfig& config, const ScenarioRunOptions& options = {});

/// Resolve the variant list: explicit variants pass through; otherwise
/// {with, without} barriers, doubled with constant-mass twins when the mass
/// profile is position-dependent.
std::vector<VariantSpec> resolve_variants(const ScenarioConfig& config);

/// The harmonic-curvature / constant-variant mass for this config.
double resolve_harmonic_mass(const ScenarioConfig& config, const Grid& grid);

struct ShapeConvergenceRow {
    double epsilon = 0.0;
    std::vector<double> even_energies;  // eV, lowest even modes
};

struct ShapeConvergenceTable {
    PseudoDeltaShape shape = PseudoDeltaShape::rectangular;
    std::vector<ShapeConvergenceRow> rows;
    std::vector<double> observed_order;   // per tracked even mode
    std::vector<double> limit_estimate;   // Richardson extrapolation, eV
};

/// Width-convergence study for one pseudo-delta family: solve the scenario at
/// each width, track the low even-mode energies and estimate the order of the
/// approach to the ideal-delta limit. epsilons must decrease, ideally by a
/// constant ratio.
ShapeConvergenceTable delta_shape_convergence(const ScenarioConfig& base, PseudoDeltaShape shape,
                                              std::span<const double> epsilons,
                                              int tracked_even_modes = 3);

std::vector<std::string> preset_names();
ScenarioConfig preset(const std::string& name);

}
