#include "numerov/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace numerov {

namespace {

PotentialSpec barrier_subset(const PotentialSpec& full, const std::vector<int>& indices) {
    PotentialSpec out;
    out.base = full.base;
    for (int i : indices) {
        out.barriers.push_back(full.barriers.at(static_cast<std::size_t>(i)));
    }
    return out;
}

std::vector<int> all_barrier_indices(const PotentialSpec& p) {
    std::vector<int> idx(p.barriers.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    return idx;
}

Spectrum solve_variant(const ScenarioConfig& config, const Grid& grid, const VariantSpec& variant,
                       double harmonic_mass, int n_modes, std::vector<double>* v_out) {
    const PotentialSpec pot = barrier_subset(config.potential, variant.barrier_indices);
    const std::vector<double> v = sample_potential(pot, grid, harmonic_mass);
    if (v_out) *v_out = v;

    const bool constant = !variant.variable_mass || std::holds_alternative<ConstantMass>(config.mass);
    if (constant) {
        const double m_rel = variant.variable_mass
                                 ? std::get<ConstantMass>(config.mass).m_rel
                                 : harmonic_mass;
        return solve(assemble_constant_mass(grid, v, m_rel), n_modes);
    }
    const std::vector<double> m = sample_mass(config.mass, grid);
    const std::vector<double> v_eff =
        effective_potential(v, config.mass, grid, config.pdm_r, config.pdm_s);
    return solve(assemble_pdm(grid, v_eff, m), n_modes);
}

}  // namespace

std::vector<VariantSpec> resolve_variants(const ScenarioConfig& config) {
    if (!config.variants.empty()) return config.variants;
    std::vector<VariantSpec> variants;
    const bool pdm = !std::holds_alternative<ConstantMass>(config.mass);
    if (config.potential.barriers.empty()) {
        variants.push_back({"base", {}, true});
        if (pdm) variants.push_back({"const_mass", {}, false});
        return variants;
    }
    const auto all = all_barrier_indices(config.potential);
    if (pdm) {
        // Fig-19 style ordering: delta+variable, variable, delta+constant, constant.
        variants.push_back({"delta_variable_mass", all, true});
        variants.push_back({"variable_mass", {}, true});
        variants.push_back({"delta_constant_mass", all, false});
        variants.push_back({"constant_mass", {}, false});
    } else {
        variants.push_back({"delta", all, true});
        variants.push_back({"no_delta", {}, true});
    }
    return variants;
}

double resolve_harmonic_mass(const ScenarioConfig& config, const Grid& grid) {
    if (config.harmonic_mass_m_rel > 0.0) return config.harmonic_mass_m_rel;
    return mass_at_center(config.mass, grid);
}

ComparisonTable compare_energies(const std::vector<LabeledSpectrum>& spectra) {
    if (spectra.empty()) throw LengthMismatch("nothing to compare");
    const int n_modes = spectra.front().spectrum.size();
    for (const auto& s : spectra) {
        if (s.spectrum.size() != n_modes) {
            throw LengthMismatch("spectrum '" + s.label + "' has " +
                                 std::to_string(s.spectrum.size()) + " modes, expected " +
                                 std::to_string(n_modes));
        }
    }
    ComparisonTable table;
    for (const auto& s : spectra) table.labels.push_back(s.label);
    table.energies.assign(n_modes, std::vector<double>(spectra.size()));
    for (int m = 0; m < n_modes; ++m) {
        for (std::size_t c = 0; c < spectra.size(); ++c) {
            table.energies[m][c] = spectra[c].spectrum.mode(m).energy_eV;
        }
    }
    if (n_modes > 1) {
        table.first_differences.assign(n_modes - 1, std::vector<double>(spectra.size()));
        for (int m = 0; m + 1 < n_modes; ++m) {
            for (std::size_t c = 0; c < spectra.size(); ++c) {
                table.first_differences[m][c] =
                    table.energies[m + 1][c] - table.energies[m][c];
            }
        }
    }
    return table;
}

ScenarioResult run_scenario(const ScenarioConfig& config, const ScenarioRunOptions& options) {
    const Grid grid = config.grid();
    const double harmonic_mass = resolve_harmonic_mass(config, grid);
    const std::vector<VariantSpec> variants = resolve_variants(config);

    // The validation block compares the first barrier variant against the
    // barrier-free variant with the same mass handling; the base solve needs
    // enough modes for the deepest spectral sum.
    int validation_with = -1, validation_base = -1;
    if (options.with_validation) {
        for (std::size_t i = 0; i < variants.size(); ++i) {
            if (!variants[i].barrier_indices.empty()) {
                validation_with = static_cast<int>(i);
                break;
            }
        }
        if (validation_with >= 0) {
            for (std::size_t i = 0; i < variants.size(); ++i) {
                if (variants[i].barrier_indices.empty() &&
                    variants[i].variable_mass == variants[validation_with].variable_mass) {
                    validation_base = static_cast<int>(i);
                    break;
                }
            }
        }
    }

    int base_modes = config.n_modes;
    for (int t : config.validation.spectral_terms) base_modes = std::max(base_modes, t);

    ScenarioResult result;
    result.grid = grid;
    for (std::size_t i = 0; i < variants.size(); ++i) {
        const bool deep = static_cast<int>(i) == validation_base;
        const int n_modes = deep ? base_modes : config.n_modes;
        std::vector<double>* v_out = i == 0 ? &result.primary_potential : nullptr;
        Spectrum spectrum = solve_variant(config, grid, variants[i], harmonic_mass, n_modes, v_out);
        result.spectra.push_back({variants[i].label, std::move(spectrum)});
    }

    if (validation_with >= 0 && validation_base >= 0) {
        const VariantSpec& vw = variants[validation_with];
        const PotentialSpec pot = barrier_subset(config.potential, vw.barrier_indices);
        const std::vector<double> m_samples =
            vw.variable_mass ? sample_mass(config.mass, grid)
                             : std::vector<double>(grid.n_points, harmonic_mass);
        result.validation = build_validation_report(
            result.spectra[validation_with].spectrum, result.spectra[validation_base].spectrum,
            pot, m_samples, config.validation);
    }

    // Comparison columns share config.n_modes even when the validation base
    // was solved deeper.
    std::vector<LabeledSpectrum> trimmed;
    for (const auto& ls : result.spectra) {
        LabeledSpectrum t{ls.label, ls.spectrum};
        if (t.spectrum.size() > config.n_modes) {
            t.spectrum.pairs.resize(config.n_modes);
        }
        trimmed.push_back(std::move(t));
    }
    result.table = compare_energies(trimmed);
    return result;
}

ShapeConvergenceTable delta_shape_convergence(const ScenarioConfig& base, PseudoDeltaShape shape,
                                              std::span<const double> epsilons,
                                              int tracked_even_modes) {
    if (base.potential.barriers.empty()) {
        throw Error("shape convergence needs a scenario with at least one barrier");
    }
    for (std::size_t i = 1; i < epsilons.size(); ++i) {
        if (!(epsilons[i] < epsilons[i - 1])) {
            throw Error("shape convergence widths must strictly decrease");
        }
    }
    const Grid grid = base.grid();
    const double harmonic_mass = resolve_harmonic_mass(base, grid);

    ShapeConvergenceTable table;
    table.shape = shape;
    for (double eps : epsilons) {
        ScenarioConfig cfg = base;
        cfg.potential.barriers[0].shape = shape;
        cfg.potential.barriers[0].epsilon = eps;
        VariantSpec variant{"delta", all_barrier_indices(cfg.potential), true};
        Spectrum spectrum = solve_variant(cfg, grid, variant, harmonic_mass, cfg.n_modes, nullptr);
        const std::vector<int> even = modes_with_parity(spectrum, Parity::even);
        ShapeConvergenceRow row;
        row.epsilon = eps;
        for (int i = 0; i < tracked_even_modes && i < static_cast<int>(even.size()); ++i) {
            row.even_energies.push_back(spectrum.mode(even[i]).energy_eV);
        }
        table.rows.push_back(std::move(row));
    }

    // Observed order and Richardson limit from the last width triple,
    // assuming a near-constant reduction ratio.
    if (table.rows.size() >= 3) {
        const auto& r1 = table.rows[table.rows.size() - 3];
        const auto& r2 = table.rows[table.rows.size() - 2];
        const auto& r3 = table.rows[table.rows.size() - 1];
        const double ratio = r1.epsilon / r2.epsilon;
        const std::size_t tracked =
            std::min({r1.even_energies.size(), r2.even_energies.size(), r3.even_energies.size()});
        for (std::size_t m = 0; m < tracked; ++m) {
            const double d12 = std::abs(r1.even_energies[m] - r2.even_energies[m]);
            const double d23 = std::abs(r2.even_energies[m] - r3.even_energies[m]);
            double order = std::numeric_limits<double>::quiet_NaN();
            double limit = r3.even_energies[m];
            if (d23 > 0.0 && ratio > 1.0) {
                order = std::log(d12 / d23) / std::log(ratio);
                const double factor = std::pow(ratio, order) - 1.0;
                if (factor > 0.0) {
                    limit = r3.even_energies[m] +
                            (r3.even_energies[m] - r2.even_energies[m]) / factor;
                }
            }
            table.observed_order.push_back(order);
            table.limit_estimate.push_back(limit);
        }
    }
    return table;
}

std::vector<std::string> preset_names() {
    return {"infinite_well_delta", "finite_well_delta",  "harmonic_delta",
            "triple_barrier_well", "pdm_harmonic_poly",  "pdm_harmonic_gauss"};
}

ScenarioConfig preset(const std::string& name) {
    ScenarioConfig cfg;
    cfg.name = name;
    if (name == "infinite_well_delta") {
        // GaAs-like effective mass in a 20 nm hard-wall well, one central
        // barrier. alpha and the 11-sample width are conventional choices
        // that make the even/odd splitting clearly visible.
        cfg.x_min_nm = -10.0;
        cfg.x_max_nm = 10.0;
        cfg.n_points = 2001;
        cfg.potential.base = InfiniteWell{};
        cfg.potential.barriers = {{0.0, 5.0, 0.05, PseudoDeltaShape::rectangular}};
        cfg.mass = ConstantMass{0.067};
        cfg.n_modes = 30;
        cfg.validation.n_check_modes = 15;
        cfg.validation.thresholds.jump_rel_max = 0.08;
        cfg.validation.thresholds.even_mode_residual_max = 0.12;
        cfg.validation.thresholds.spectral_gap_max = 0.15;
        cfg.validation.thresholds.expansion_l2_max = 0.06;
        cfg.validation.thresholds.norm_check_tol = 0.10;
    } else if (name == "finite_well_delta") {
        cfg.x_min_nm = -30.0;
        cfg.x_max_nm = 30.0;
        cfg.n_points = 3001;
        cfg.potential.base = FiniteWell{0.6, 10.0, 0.0};
        cfg.potential.barriers = {{0.0, 5.0, 0.1, PseudoDeltaShape::rectangular}};
        cfg.mass = ConstantMass{0.067};
        cfg.n_modes = 19;
        cfg.validation.n_check_modes = 8;
        cfg.validation.thresholds.jump_rel_max = 0.08;
    } else if (name == "harmonic_delta") {
        cfg.x_min_nm = -12.0;
        cfg.x_max_nm = 12.0;
        cfg.n_points = 2401;
        cfg.potential.base = Harmonic{1e15, 0.0};
        cfg.potential.barriers = {{0.0, 5.0, 0.05, PseudoDeltaShape::rectangular}};
        cfg.mass = ConstantMass{0.067};
        cfg.n_modes = 24;
        cfg.validation.n_check_modes = 12;
        cfg.validation.thresholds.jump_rel_max = 0.08;
    } else if (name == "triple_barrier_well") {
        cfg.x_min_nm = 0.0;
        cfg.x_max_nm = 21.0;
        cfg.n_points = 2101;
        cfg.potential.base = InfiniteWell{};
        cfg.potential.barriers = {{4.5, 5.0, 0.05, PseudoDeltaShape::rectangular},
                                  {10.5, 5.0, 0.05, PseudoDeltaShape::rectangular},
                                  {16.5, 5.0, 0.05, PseudoDeltaShape::rectangular}};
        cfg.mass = ConstantMass{0.067};
        cfg.n_modes = 25;
        cfg.variants = {{"I_three_barriers", {0, 1, 2}, true},
                        {"II_lateral_barriers", {0, 2}, true},
                        {"III_central_barrier", {1}, true},
                        {"IV_no_barriers", {}, true}};
        cfg.validation.n_check_modes = 10;
        cfg.validation.thresholds.jump_rel_max = 0.08;
    } else if (name == "pdm_harmonic_poly") {
        // Quadratically growing mass in a harmonic trap; the curvature mass
        // and the constant-mass variants use the profile's center value.
        cfg.x_min_nm = -8.0;
        cfg.x_max_nm = 8.0;
        cfg.n_points = 1601;
        cfg.potential.base = Harmonic{1e15, 0.0};
        cfg.potential.barriers = {{0.0, 5.0, 0.05, PseudoDeltaShape::rectangular}};
        cfg.mass = QuadraticMass{0.0665, 0.0835};
        cfg.harmonic_mass_m_rel = 0.0665;
        cfg.n_modes = 11;
        cfg.validation.n_check_modes = 6;
        cfg.validation.thresholds.jump_rel_max = 0.12;
    } else if (name == "pdm_harmonic_gauss") {
        cfg.x_min_nm = -4.0;
        cfg.x_max_nm = 4.0;
        cfg.n_points = 1601;
        cfg.potential.base = Harmonic{1e15, 0.0};
        cfg.potential.barriers = {{0.0, 5.0, 0.025, PseudoDeltaShape::rectangular}};
        cfg.mass = GaussianBumpMass{1.0, 0.67, 1.0};
        cfg.harmonic_mass_m_rel = 1.0;
        cfg.n_modes = 10;
        cfg.validation.n_check_modes = 5;
        cfg.validation.thresholds.jump_rel_max = 0.12;
    } else {
        throw ConfigError("unknown preset '" + name + "'");
    }
    return cfg;
}

}
