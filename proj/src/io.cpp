#include "numerov/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "numerov/version.hpp"

namespace numerov {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    return out;
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_energies_csv(const std::string& path, const Spectrum& spectrum) {
    auto out = open_out(path);
    out << "mode_index_1based,energy_eV\n";
    for (const auto& pair : spectrum.pairs) {
        out << pair.mode_index + 1 << "," << format_number(pair.energy_eV) << "\n";
    }
}

void write_wavefunction_csv(const std::string& path, const Eigenpair& pair, const Grid& grid) {
    auto out = open_out(path);
    out << "x_nm,psi,psi_sq,dpsi_dx\n";
    for (int k = 0; k < grid.n_points; ++k) {
        out << format_number(grid.x(k)) << "," << format_number(pair.psi[k]) << ","
            << format_number(pair.psi[k] * pair.psi[k]) << ","
            << format_number(pair.dpsi_dx[k]) << "\n";
    }
}

void write_potential_csv(const std::string& path, const Grid& grid,
                         std::span<const double> v_samples) {
    auto out = open_out(path);
    out << "x_nm,v_eV\n";
    for (int k = 0; k < grid.n_points; ++k) {
        out << format_number(grid.x(k)) << "," << format_number(v_samples[k]) << "\n";
    }
}

void write_comparison_csv(const std::string& path, const ComparisonTable& table) {
    auto out = open_out(path);
    out << "mode_index_1based";
    for (const auto& label : table.labels) out << ",energy_eV_" << label;
    for (const auto& label : table.labels) out << ",spacing_eV_" << label;
    out << "\n";
    for (std::size_t m = 0; m < table.energies.size(); ++m) {
        out << m + 1;
        for (double e : table.energies[m]) out << "," << format_number(e);
        if (m < table.first_differences.size()) {
            for (double d : table.first_differences[m]) out << "," << format_number(d);
        } else {
            for (std::size_t c = 0; c < table.labels.size(); ++c) out << ",";
        }
        out << "\n";
    }
}

std::string report_to_text(const ValidationReport& report) {
    std::ostringstream out;
    out << "# validation report\n";
    for (const auto& c : report.checks) {
        out << "check=" << c.name;
        if (c.mode_1based > 0) out << " mode=" << c.mode_1based;
        out << " value=" << format_number(c.value);
        if (std::isfinite(c.threshold)) {
            out << " threshold=" << format_number(c.threshold)
                << " status=" << (c.passed ? "PASS" : "FAIL");
        } else {
            out << " status=INFO";
        }
        if (!c.detail.empty()) out << " " << c.detail;
        out << "\n";
    }
    const int failed = report.n_failed();
    out << "summary checks=" << report.checks.size() << " failed=" << failed
        << " overall=" << (failed == 0 ? "PASS" : "FAIL") << "\n";
    return out.str();
}

void write_report_text(const std::string& path, const ValidationReport& report) {
    auto out = open_out(path);
    out << report_to_text(report);
}

void write_sweep_csv(const std::string& path, const SweepTable& table) {
    auto out = open_out(path);
    out << table.parameter;
    for (const auto& c : table.columns) out << "," << c;
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << format_number(row[i]);
        }
        out << "\n";
    }
}

void write_sweep_summary(const std::string& path, const SweepTable& table) {
    auto out = open_out(path);
    out << "# sweep convergence summary (" << table.parameter << ")\n";
    for (std::size_t i = 0; i < table.observed_order.size(); ++i) {
        out << table.columns[i] << " observed_order=" << format_number(table.observed_order[i])
            << " limit_estimate_eV=" << format_number(table.limit_estimate[i]) << "\n";
    }
}

void write_manifest(const std::string& path, const RunManifest& manifest) {
    nlohmann::ordered_json j;
    j["solver_version"] = version_string;
    j["command"] = manifest.command;
    j["scenario"] = manifest.scenario_name;
    j["config"] = nlohmann::ordered_json::parse(manifest.config_json.empty() ? "{}"
                                                                             : manifest.config_json);
    j["outputs"] = manifest.outputs;
    j["timings_ms"] = manifest.timings_ms;
    if (!manifest.plot_scales.empty()) j["plot_scales"] = manifest.plot_scales;
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            cells.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (first) {
            table.header = cells;
            first = false;
            continue;
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& cell : cells) {
            row.push_back(cell.empty() ? std::nan("") : std::stod(cell));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}
