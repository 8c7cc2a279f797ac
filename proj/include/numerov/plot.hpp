#pragma once

#include <map>
#include <string>
#include <vector>

#include "numerov/io.hpp"

namespace numerov {

/// Static SVG line/scatter plots for solver outputs. These are small
/// self-contained writers; no plotting toolkit is involved, which keeps the
/// output deterministic.

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    bool markers = false;  // draw points instead of a polyline
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
    bool log_x = false;
    bool log_y = false;
};

std::string render_svg(const PlotSpec& spec);
void write_svg(const std::string& path, const PlotSpec& spec);

/// Mode profile in the paper-figure style: |psi|^2 and dpsi/dx scaled to a
/// fraction of the local energy gap and offset to sit at the mode's energy,
/// with the potential profile overlaid. Returns the applied scale factors
/// keyed by series name (recorded in the run manifest).
std::map<std::string, double> write_mode_profile_svg(
    const std::string& path, const Grid& grid, std::span<const double> v_samples,
    const Eigenpair& pair, double energy_gap_eV);

void write_energy_scatter_svg(const std::string& path, const ComparisonTable& table);
void write_sweep_convergence_svg(const std::string& path, const SweepTable& table);

}
