#include "numerov/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "numerov/config.hpp"
#include "numerov/io.hpp"
#include "numerov/plot.hpp"

namespace numerov {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ScenarioConfig resolve_config(const CliOptions& options) {
    if (!options.config_path.empty() && !options.preset_name.empty()) {
        throw ConfigError("pass either --config or --preset, not both");
    }
    ScenarioConfig cfg;
    if (!options.preset_name.empty()) {
        cfg = preset(options.preset_name);
    } else if (!options.config_path.empty()) {
        cfg = load_config(options.config_path);
    } else {
        throw ConfigError("one of --config <path> or --preset <name> is required");
    }
    if (options.modes_override > 0) cfg.n_modes = options.modes_override;
    if (options.grid_points_override > 0) cfg.n_points = options.grid_points_override;
    return cfg;
}

fs::path resolve_out_dir(const CliOptions& options, const ScenarioConfig& cfg) {
    if (!options.out.empty()) return options.out;
    fs::path root = ".";
    if (const char* env = std::getenv("NUMEROV_OUT_DIR")) {
        if (*env) root = env;
    }
    if (!cfg.output.dir.empty()) {
        const fs::path d = cfg.output.dir;
        return d.is_absolute() ? d : root / d;
    }
    return root / ("results_" + cfg.name);
}

std::vector<int> selected_modes(const ScenarioConfig& cfg) {
    std::vector<int> modes;
    switch (cfg.output.wavefunctions) {
        case WavefunctionSelection::none:
            break;
        case WavefunctionSelection::all:
            for (int m = 1; m <= cfg.n_modes; ++m) modes.push_back(m);
            break;
        case WavefunctionSelection::listed:
            for (int m : cfg.output.wavefunction_modes_1based) {
                if (m >= 1 && m <= cfg.n_modes) modes.push_back(m);
            }
            break;
    }
    return modes;
}

// Writes the common solve artifacts; paths are recorded in the manifest.
void write_solve_outputs(const ScenarioResult& result, const ScenarioConfig& cfg,
                         const fs::path& dir, RunManifest& manifest) {
    const auto& primary = result.spectra.front();
    const fs::path energies = dir / "energies.csv";
    write_energies_csv(energies.string(), primary.spectrum);
    manifest.outputs.push_back(energies.string());

    if (cfg.output.write_potential) {
        const fs::path potential = dir / "potential.csv";
        write_potential_csv(potential.string(), result.grid, result.primary_potential);
        manifest.outputs.push_back(potential.string());
    }

    if (result.spectra.size() > 1) {
        const fs::path comparison = dir / "comparison.csv";
        write_comparison_csv(comparison.string(), result.table);
        manifest.outputs.push_back(comparison.string());
    }

    for (int m : selected_modes(cfg)) {
        if (m > primary.spectrum.size()) break;
        const fs::path wf = dir / ("wavefunction_" + std::to_string(m) + ".csv");
        write_wavefunction_csv(wf.string(), primary.spectrum.mode(m - 1), result.grid);
        manifest.outputs.push_back(wf.string());
    }
}

int run_guarded(const char* command, int (*body)(const CliOptions&), const CliOptions& options) {
    try {
        return body(options);
    } catch (const ConfigError& e) {
        std::cerr << command << ": config error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const InvalidGrid& e) {
        std::cerr << command << ": config error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const BarrierOutsideDomain& e) {
        std::cerr << command << ": config error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const BarrierUnderResolved& e) {
        std::cerr << command << ": config error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const Error& e) {
        std::cerr << command << ": numerical failure: " << e.what() << "\n";
        return exit_numerical_error;
    } catch (const std::exception& e) {
        std::cerr << command << ": " << e.what() << "\n";
        return exit_numerical_error;
    }
}

int solve_body(const CliOptions& options) {
    const auto t0 = Clock::now();
    const ScenarioConfig cfg = resolve_config(options);
    const fs::path dir = resolve_out_dir(options, cfg);
    fs::create_directories(dir);

    RunManifest manifest;
    manifest.command = "solve";
    manifest.scenario_name = cfg.name;
    manifest.config_json = config_to_json_text(cfg);

    const auto t_solve = Clock::now();
    const ScenarioResult result = run_scenario(cfg, {false});
    manifest.timings_ms["solve"] = ms_since(t_solve);

    write_solve_outputs(result, cfg, dir, manifest);
    manifest.timings_ms["total"] = ms_since(t0);
    const fs::path manifest_path = dir / "manifest.json";
    manifest.outputs.push_back(manifest_path.string());
    write_manifest(manifest_path.string(), manifest);

    std::cout << "solved '" << cfg.name << "': " << result.spectra.size() << " variant(s), "
              << cfg.n_modes << " modes each -> " << dir.string() << "\n";
    for (std::size_t i = 0; i < result.spectra.size(); ++i) {
        std::cout << "  " << result.spectra[i].label
                  << ": E_1 = " << format_number(result.spectra[i].spectrum.mode(0).energy_eV)
                  << " eV\n";
    }
    return exit_ok;
}

int validate_body(const CliOptions& options) {
    const auto t0 = Clock::now();
    const ScenarioConfig cfg = resolve_config(options);
    if (cfg.potential.barriers.empty()) {
        throw ConfigError("nothing to validate: the config has no barriers");
    }
    const fs::path dir = resolve_out_dir(options, cfg);
    fs::create_directories(dir);

    RunManifest manifest;
    manifest.command = "validate";
    manifest.scenario_name = cfg.name;
    manifest.config_json = config_to_json_text(cfg);

    const ScenarioResult result = run_scenario(cfg, {true});
    if (!result.validation) {
        throw ConfigError("validation needs a barrier variant and a barrier-free counterpart");
    }

    write_solve_outputs(result, cfg, dir, manifest);
    const fs::path report = dir / "validation_report.txt";
    write_report_text(report.string(), *result.validation);
    manifest.outputs.push_back(report.string());

    manifest.timings_ms["total"] = ms_since(t0);
    const fs::path manifest_path = dir / "manifest.json";
    manifest.outputs.push_back(manifest_path.string());
    write_manifest(manifest_path.string(), manifest);

    std::cout << report_to_text(*result.validation);
    std::cout << "report -> " << report.string() << "\n";
    return result.validation->all_passed() ? exit_ok : exit_validation_failed;
}

SweepTable run_sweep(const ScenarioConfig& cfg) {
    const SweepSpec& sweep = *cfg.sweep;
    if (sweep.values.empty()) throw ConfigError("sweep.values is empty");
    SweepTable table;
    table.parameter = sweep.parameter;

    auto tracked_labels = [&](std::size_t n) {
        for (std::size_t i = table.columns.size(); i < n; ++i) {
            table.columns.push_back("E_even_" + std::to_string(i + 1) + "_eV");
        }
    };

    if (sweep.parameter == "epsilon") {
        const PseudoDeltaShape shape =
            sweep.shape.value_or(cfg.potential.barriers.at(sweep.barrier_index).shape);
        const auto conv = delta_shape_convergence(cfg, shape, sweep.values);
        for (const auto& row : conv.rows) {
            std::vector<double> r{row.epsilon};
            r.insert(r.end(), row.even_energies.begin(), row.even_energies.end());
            tracked_labels(row.even_energies.size());
            table.rows.push_back(std::move(r));
        }
        table.observed_order = conv.observed_order;
        table.limit_estimate = conv.limit_estimate;
        return table;
    }

    // alpha and n_points sweeps share the generic loop.
    for (double value : sweep.values) {
        ScenarioConfig point = cfg;
        point.variants = {{"delta", {}, true}};
        for (std::size_t i = 0; i < point.potential.barriers.size(); ++i) {
            point.variants[0].barrier_indices.push_back(static_cast<int>(i));
        }
        if (sweep.parameter == "alpha") {
            point.potential.barriers.at(sweep.barrier_index).strength_alpha_eV_nm = value;
        } else {
            point.n_points = static_cast<int>(value);
        }
        const ScenarioResult result = run_scenario(point, {false});
        const Spectrum& spectrum = result.spectra.front().spectrum;
        const auto even = modes_with_parity(spectrum, Parity::even);
        std::vector<double> row{value};
        for (std::size_t i = 0; i < even.size() && i < 3; ++i) {
            row.push_back(spectrum.mode(even[i]).energy_eV);
        }
        tracked_labels(row.size() - 1);
        table.rows.push_back(std::move(row));
    }

    // Order estimate only makes sense for a decreasing positive sequence
    // with a steady ratio (e.g. halvings).
    if (table.rows.size() >= 3) {
        const auto& r1 = table.rows[table.rows.size() - 3];
        const auto& r2 = table.rows[table.rows.size() - 2];
        const auto& r3 = table.rows[table.rows.size() - 1];
        if (r1[0] > r2[0] && r2[0] > r3[0] && r3[0] > 0.0) {
            const double ratio = r1[0] / r2[0];
            const std::size_t tracked = std::min({r1.size(), r2.size(), r3.size()}) - 1;
            for (std::size_t m = 1; m <= tracked; ++m) {
                const double d12 = std::abs(r1[m] - r2[m]);
                const double d23 = std::abs(r2[m] - r3[m]);
                double order = std::numeric_limits<double>::quiet_NaN();
                double limit = r3[m];
                if (d23 > 0.0 && ratio > 1.0) {
                    order = std::log(d12 / d23) / std::log(ratio);
                    const double factor = std::pow(ratio, order) - 1.0;
                    if (factor > 0.0) limit = r3[m] + (r3[m] - r2[m]) / factor;
                }
                table.observed_order.push_back(order);
                table.limit_estimate.push_back(limit);
            }
        }
    }
    return table;
}

int sweep_body(const CliOptions& options) {
    const auto t0 = Clock::now();
    const ScenarioConfig cfg = resolve_config(options);
    if (!cfg.sweep) throw ConfigError("missing required block 'sweep'");
    const fs::path dir = resolve_out_dir(options, cfg);
    fs::create_directories(dir);

    RunManifest manifest;
    manifest.command = "sweep";
    manifest.scenario_name = cfg.name;
    manifest.config_json = config_to_json_text(cfg);

    const SweepTable table = run_sweep(cfg);

    const fs::path sweep_csv = dir / "sweep.csv";
    write_sweep_csv(sweep_csv.string(), table);
    manifest.outputs.push_back(sweep_csv.string());
    const fs::path summary = dir / "sweep_summary.txt";
    write_sweep_summary(summary.string(), table);
    manifest.outputs.push_back(summary.string());

    manifest.timings_ms["total"] = ms_since(t0);
    const fs::path manifest_path = dir / "manifest.json";
    manifest.outputs.push_back(manifest_path.string());
    write_manifest(manifest_path.string(), manifest);

    std::cout << "sweep '" << cfg.sweep->parameter << "' over " << table.rows.size()
              << " value(s) -> " << dir.string() << "\n";
    for (std::size_t i = 0; i < table.observed_order.size(); ++i) {
        std::cout << "  " << table.columns[i] << ": observed order "
                  << format_number(table.observed_order[i]) << ", limit "
                  << format_number(table.limit_estimate[i]) << " eV\n";
    }
    return exit_ok;
}

}  // namespace

int cmd_solve(const CliOptions& options) { return run_guarded("solve", solve_body, options); }
int cmd_validate(const CliOptions& options) { return run_guarded("validate", validate_body, options); }
int cmd_sweep(const CliOptions& options) { return run_guarded("sweep", sweep_body, options); }

int cmd_plot(const CliOptions& options, const std::string& result_dir) {
    (void)options;
    try {
        const fs::path dir = result_dir;
        if (!fs::is_directory(dir)) {
            throw ConfigError(result_dir + " is not a directory");
        }
        RunManifest manifest;
        manifest.command = "plot";
        manifest.scenario_name = dir.filename().string();
        int produced = 0;

        const fs::path energies = dir / "energies.csv";
        const fs::path comparison = dir / "comparison.csv";
        const fs::path potential = dir / "potential.csv";
        const fs::path sweep_csv = dir / "sweep.csv";

        ComparisonTable table;
        if (fs::exists(comparison)) {
            const CsvTable csv = read_csv(comparison.string());
            const std::size_t n_labels = (csv.header.size() - 1) / 2;
            for (std::size_t c = 0; c < n_labels; ++c) {
                table.labels.push_back(csv.header[1 + c].substr(std::string("energy_eV_").size()));
            }
            for (const auto& row : csv.rows) {
                table.energies.emplace_back(row.begin() + 1, row.begin() + 1 + n_labels);
            }
        } else if (fs::exists(energies)) {
            const CsvTable csv = read_csv(energies.string());
            table.labels.push_back("energy");
            for (const auto& row : csv.rows) table.energies.push_back({row[1]});
        }
        if (!table.energies.empty()) {
            const fs::path out = dir / "energies.svg";
            write_energy_scatter_svg(out.string(), table);
            manifest.outputs.push_back(out.string());
            ++produced;
        }

        if (fs::exists(potential)) {
            const CsvTable pot = read_csv(potential.string());
            std::vector<double> x, v;
            for (const auto& row : pot.rows) {
                x.push_back(row[0]);
                v.push_back(row[1]);
            }
            Grid grid;
            if (x.size() >= 3) {
                grid = make_grid(x.front(), x.back(), static_cast<int>(x.size()));
            }
            for (const auto& entry : fs::directory_iterator(dir)) {
                const std::string name = entry.path().filename().string();
                if (name.rfind("wavefunction_", 0) != 0 || entry.path().extension() != ".csv")
                    continue;
                const CsvTable wf = read_csv(entry.path().string());
                Eigenpair pair;
                pair.mode_index =
                    std::stoi(name.substr(std::string("wavefunction_").size())) - 1;
                for (const auto& row : wf.rows) {
                    pair.psi.push_back(row[1]);
                    pair.dpsi_dx.push_back(row[3]);
                }
                double gap = 1.0;
                if (pair.mode_index + 1 < static_cast<int>(table.energies.size())) {
                    gap = table.energies[pair.mode_index + 1][0] -
                          table.energies[pair.mode_index][0];
                }
                if (pair.mode_index < static_cast<int>(table.energies.size())) {
                    pair.energy_eV = table.energies[pair.mode_index][0];
                }
                const fs::path out = entry.path().parent_path() /
                                     (entry.path().stem().string() + ".svg");
                const auto scales =
                    write_mode_profile_svg(out.string(), grid, v, pair, gap);
                manifest.plot_scales.insert(scales.begin(), scales.end());
                manifest.outputs.push_back(out.string());
                ++produced;
            }
        }

        if (fs::exists(sweep_csv)) {
            const CsvTable csv = read_csv(sweep_csv.string());
            SweepTable sweep;
            sweep.parameter = csv.header.empty() ? "value" : csv.header[0];
            sweep.columns.assign(csv.header.begin() + 1, csv.header.end());
            sweep.rows = csv.rows;
            const fs::path out = dir / "sweep.svg";
            write_sweep_convergence_svg(out.string(), sweep);
            manifest.outputs.push_back(out.string());
            ++produced;
        }

        if (produced == 0) {
            throw ConfigError("no plottable inputs (energies.csv, wavefunction_*.csv, sweep.csv) in " +
                              result_dir);
        }
        const fs::path manifest_path = dir / "plots_manifest.json";
        manifest.outputs.push_back(manifest_path.string());
        write_manifest(manifest_path.string(), manifest);
        std::cout << "plotted " << produced << " figure(s) -> " << result_dir << "\n";
        return exit_ok;
    } catch (const ConfigError& e) {
        std::cerr << "plot: " << e.what() << "\n";
        return exit_config_error;
    } catch (const std::exception& e) {
        std::cerr << "plot: " << e.what() << "\n";
        return exit_config_error;
    }
}

int cmd_dump_preset(const CliOptions& options) {
    try {
        if (options.preset_name.empty()) {
            throw ConfigError("dump-preset requires --preset <name>");
        }
        const ScenarioConfig cfg = preset(options.preset_name);
        const std::string text = config_to_json_text(cfg);
        if (options.out.empty() || options.out == "-") {
            std::cout << text;
        } else {
            std::ofstream out(options.out);
            if (!out) throw ConfigError("cannot write " + options.out);
            out << text;
        }
        return exit_ok;
    } catch (const ConfigError& e) {
        std::cerr << "dump-preset: " << e.what() << "\n";
        return exit_config_error;
    }
}

int cmd_list_presets() {
    for (const auto& name : preset_names()) {
        const ScenarioConfig cfg = preset(name);
        std::cout << name << ": [" << cfg.x_min_nm << ", " << cfg.x_max_nm << "] nm, "
                  << cfg.n_points << " points, " << cfg.n_modes << " modes, "
                  << cfg.potential.barriers.size() << " barrier(s)\n";
    }
    return exit_ok;
}

}
