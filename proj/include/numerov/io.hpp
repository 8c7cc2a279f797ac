#pragma once

#include <map>
#include <string>
#include <vector>

#include "numerov/scenarios.hpp"

namespace numerov {

/// %.12g formatting shared by every CSV writer, so identical runs produce
/// byte-identical files.
std::string format_number(double v);

void write_energies_csv(const std::string& path, const Spectrum& spectrum);
void write_wavefunction_csv(const std::string& path, const Eigenpair& pair, const Grid& grid);
void write_potential_csv(const std::string& path, const Grid& grid,
                         std::span<const double> v_samples);
void write_comparison_csv(const std::string& path, const ComparisonTable& table);

/// One `check=... status=...` line per validation row plus a machine-readable
/// summary line.
void write_report_text(const std::string& path, const ValidationReport& report);
std::string report_to_text(const ValidationReport& report);

/// Generic sweep table: first column is the swept value, the rest are the
/// tracked even-mode energies.
struct SweepTable {
    std::string parameter;
    std::vector<std::string> columns;        // energy column names
    std::vector<std::vector<double>> rows;   // [i] = value, then energies
    std::vector<double> observed_order;      // per tracked column (may be NaN)
    std::vector<double> limit_estimate;      // per tracked column
};

void write_sweep_csv(const std::string& path, const SweepTable& table);
void write_sweep_summary(const std::string& path, const SweepTable& table);

struct RunManifest {
    std::string command;
    std::string scenario_name;
    std::string config_json;                      // canonical echo of the run config
    std::vector<std::string> outputs;             // every emitted file, exactly once
    std::map<std::string, double> timings_ms;
    std::map<std::string, double> plot_scales;    // per-mode offsets/scales (plot runs)
};

void write_manifest(const std::string& path, const RunManifest& manifest);

/// Minimal CSV reader for the plot command (numeric cells, one header line).
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};
CsvTable read_csv(const std::string& path);

}
