#include "numerov/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace numerov {

namespace {

constexpr int canvas_w = 860;
constexpr int canvas_h = 560;
constexpr int margin_left = 72;
constexpr int margin_right = 24;
constexpr int margin_top = 40;
constexpr int margin_bottom = 56;

const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

struct Range {
    double lo = 0.0, hi = 1.0;

    void expand(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double nice_step(double span) {
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double frac = raw / mag;
    if (frac < 1.5) return mag;
    if (frac < 3.5) return 2.0 * mag;
    if (frac < 7.5) return 5.0 * mag;
    return 10.0 * mag;
}

class Canvas {
  public:
    Canvas(Range xr, Range yr, bool log_x, bool log_y)
        : xr_(xr), yr_(yr), log_x_(log_x), log_y_(log_y) {}

    double tx(double x) const {
        const double u = log_x_ ? std::log10(x) : x;
        const double lo = log_x_ ? std::log10(xr_.lo) : xr_.lo;
        const double hi = log_x_ ? std::log10(xr_.hi) : xr_.hi;
        return margin_left + (u - lo) / (hi - lo) * (canvas_w - margin_left - margin_right);
    }
    double ty(double y) const {
        const double u = log_y_ ? std::log10(y) : y;
        const double lo = log_y_ ? std::log10(yr_.lo) : yr_.lo;
        const double hi = log_y_ ? std::log10(yr_.hi) : yr_.hi;
        return canvas_h - margin_bottom -
               (u - lo) / (hi - lo) * (canvas_h - margin_top - margin_bottom);
    }

    Range xr_, yr_;
    bool log_x_, log_y_;
};

void draw_axes(std::ostringstream& svg, const Canvas& c, const PlotSpec& spec) {
    svg << "<rect x='" << margin_left << "' y='" << margin_top << "' width='"
        << canvas_w - margin_left - margin_right << "' height='"
        << canvas_h - margin_top - margin_bottom << "' fill='none' stroke='#333'/>\n";
    // ticks (linear axes only get nice steps; log axes get decades)
    auto tick_values = [](const Range& r, bool log) {
        std::vector<double> ticks;
        if (log) {
            const int d0 = static_cast<int>(std::ceil(std::log10(r.lo) - 1e-9));
            const int d1 = static_cast<int>(std::floor(std::log10(r.hi) + 1e-9));
            for (int d = d0; d <= d1; ++d) ticks.push_back(std::pow(10.0, d));
        } else {
            const double step = nice_step(r.hi - r.lo);
            for (double v = std::ceil(r.lo / step) * step; v <= r.hi + 1e-12 * step; v += step)
                ticks.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
        }
        return ticks;
    };
    for (double v : tick_values(c.xr_, c.log_x_)) {
        const double x = c.tx(v);
        svg << "<line x1='" << fmt(x) << "' y1='" << canvas_h - margin_bottom << "' x2='" << fmt(x)
            << "' y2='" << canvas_h - margin_bottom + 5 << "' stroke='#333'/>\n";
        svg << "<text x='" << fmt(x) << "' y='" << canvas_h - margin_bottom + 20
            << "' font-size='12' text-anchor='middle'>" << fmt(v) << "</text>\n";
    }
    for (double v : tick_values(c.yr_, c.log_y_)) {
        const double y = c.ty(v);
        svg << "<line x1='" << margin_left - 5 << "' y1='" << fmt(y) << "' x2='" << margin_left
            << "' y2='" << fmt(y) << "' stroke='#333'/>\n";
        svg << "<text x='" << margin_left - 8 << "' y='" << fmt(y + 4)
            << "' font-size='12' text-anchor='end'>" << fmt(v) << "</text>\n";
    }
    svg << "<text x='" << (margin_left + canvas_w - margin_right) / 2 << "' y='" << canvas_h - 14
        << "' font-size='14' text-anchor='middle'>" << spec.x_label << "</text>\n";
    svg << "<text x='18' y='" << (margin_top + canvas_h - margin_bottom) / 2
        << "' font-size='14' text-anchor='middle' transform='rotate(-90 18 "
        << (margin_top + canvas_h - margin_bottom) / 2 << ")'>" << spec.y_label << "</text>\n";
    svg << "<text x='" << canvas_w / 2 << "' y='24' font-size='15' text-anchor='middle'>"
        << spec.title << "</text>\n";
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
    Range xr{1e300, -1e300}, yr{1e300, -1e300};
    for (const auto& s : spec.series) {
        for (double v : s.x) {
            if (!spec.log_x || v > 0) xr.expand(v);
        }
        for (double v : s.y) {
            if (!spec.log_y || v > 0) yr.expand(v);
        }
    }
    if (xr.lo > xr.hi) xr = {0.0, 1.0};
    if (yr.lo > yr.hi) yr = {0.0, 1.0};
    if (xr.hi == xr.lo) xr.hi = xr.lo + 1.0;
    if (yr.hi == yr.lo) yr.hi = yr.lo + 1.0;
    if (!spec.log_y) {
        const double pad = 0.05 * (yr.hi - yr.lo);
        yr.lo -= pad;
        yr.hi += pad;
    }
    const Canvas c(xr, yr, spec.log_x, spec.log_y);

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << canvas_w << "' height='"
        << canvas_h << "' viewBox='0 0 " << canvas_w << " " << canvas_h << "'>\n";
    svg << "<rect width='100%' height='100%' fill='white'/>\n";
    draw_axes(svg, c, spec);

    int color = 0;
    double legend_y = margin_top + 16;
    for (const auto& s : spec.series) {
        const char* col = palette[color % 8];
        ++color;
        if (s.markers) {
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                if (spec.log_y && !(s.y[i] > 0)) continue;
                svg << "<circle cx='" << fmt(c.tx(s.x[i])) << "' cy='" << fmt(c.ty(s.y[i]))
                    << "' r='3' fill='" << col << "'/>\n";
            }
        } else {
            svg << "<polyline fill='none' stroke='" << col << "' stroke-width='1.5' points='";
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                if (spec.log_y && !(s.y[i] > 0)) continue;
                svg << fmt(c.tx(s.x[i])) << "," << fmt(c.ty(s.y[i])) << " ";
            }
            svg << "'/>\n";
        }
        if (!s.label.empty()) {
            svg << "<line x1='" << canvas_w - margin_right - 150 << "' y1='" << fmt(legend_y - 4)
                << "' x2='" << canvas_w - margin_right - 126 << "' y2='" << fmt(legend_y - 4)
                << "' stroke='" << col << "' stroke-width='2'/>\n";
            svg << "<text x='" << canvas_w - margin_right - 120 << "' y='" << fmt(legend_y)
                << "' font-size='12'>" << s.label << "</text>\n";
            legend_y += 16;
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_svg(const std::string& path, const PlotSpec& spec) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << render_svg(spec);
}

std::map<std::string, double> write_mode_profile_svg(
    const std::string& path, const Grid& grid, std::span<const double> v_samples,
    const Eigenpair& pair, double energy_gap_eV) {
    std::vector<double> x(grid.n_points);
    for (int k = 0; k < grid.n_points; ++k) x[k] = grid.x(k);

    double psi_sq_max = 0.0, dpsi_max = 0.0;
    for (int k = 0; k < grid.n_points; ++k) {
        psi_sq_max = std::max(psi_sq_max, pair.psi[k] * pair.psi[k]);
        dpsi_max = std::max(dpsi_max, std::abs(pair.dpsi_dx[k]));
    }
    // Traces are scaled to 80% of the local gap and displaced to the mode
    // energy so they sit inside the potential profile.
    const double gap = energy_gap_eV > 0 ? energy_gap_eV : 1.0;
    const double scale_sq = psi_sq_max > 0 ? 0.8 * gap / psi_sq_max : 1.0;
    const double scale_d = dpsi_max > 0 ? 0.4 * gap / dpsi_max : 1.0;

    PlotSpec spec;
    spec.title = "mode " + std::to_string(pair.mode_index + 1) +
                 ", E = " + format_number(pair.energy_eV) + " eV";
    spec.x_label = "x (nm)";
    spec.y_label = "energy (eV) / displaced traces";

    PlotSeries pot{"V(x)", x, std::vector<double>(v_samples.begin(), v_samples.end()), false};
    PlotSeries level{"", {grid.x_min, grid.x_max}, {pair.energy_eV, pair.energy_eV}, false};
    PlotSeries sq{"|psi|^2 (displaced)", x, {}, false};
    PlotSeries dp{"dpsi/dx (displaced)", x, {}, false};
    sq.y.resize(grid.n_points);
    dp.y.resize(grid.n_points);
    for (int k = 0; k < grid.n_points; ++k) {
        sq.y[k] = pair.energy_eV + scale_sq * pair.psi[k] * pair.psi[k];
        dp.y[k] = pair.energy_eV + scale_d * pair.dpsi_dx[k];
    }
    spec.series = {pot, level, sq, dp};
    write_svg(path, spec);
    return {{"psi_sq_scale_mode_" + std::to_string(pair.mode_index + 1), scale_sq},
            {"dpsi_dx_scale_mode_" + std::to_string(pair.mode_index + 1), scale_d}};
}

void write_energy_scatter_svg(const std::string& path, const ComparisonTable& table) {
    PlotSpec spec;
    spec.title = "energies by mode";
    spec.x_label = "mode index";
    spec.y_label = "energy (eV)";
    for (std::size_t c = 0; c < table.labels.size(); ++c) {
        PlotSeries s;
        s.label = table.labels[c];
        s.markers = true;
        for (std::size_t m = 0; m < table.energies.size(); ++m) {
            s.x.push_back(static_cast<double>(m + 1));
            s.y.push_back(table.energies[m][c]);
        }
        spec.series.push_back(std::move(s));
    }
    write_svg(path, spec);
}

void write_sweep_convergence_svg(const std::string& path, const SweepTable& table) {
    PlotSpec spec;
    spec.title = "sweep: " + table.parameter;
    spec.x_label = table.parameter;
    spec.y_label = "energy (eV)";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        PlotSeries s;
        s.label = table.columns[c];
        s.markers = true;
        for (const auto& row : table.rows) {
            if (c + 1 < row.size()) {
                s.x.push_back(row[0]);
                s.y.push_back(row[c + 1]);
            }
        }
        spec.series.push_back(std::move(s));
    }
    write_svg(path, spec);
}

}
