#include "numerov/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "numerov/kernels.hpp"
#include "numerov/units.hpp"

namespace numerov {

namespace {

constexpr double pi = 3.14159265358979323846;

// Tolerance for deciding that a sample sits exactly on a rectangular support
// edge. Positions are ~10 nm doubles, so their rounding noise is ~1e-14 nm;
// 1e-9 nm is far above that and far below any resolvable dx.
constexpr double edge_tol_nm = 1e-9;

double base_value(const BasePotentialSpec& base, double x, double m_rel_for_harmonic) {
    return std::visit(
        [&](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, InfiniteWell>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, FiniteWell>) {
                return std::abs(x - b.center_nm) <= b.half_width_nm ? -b.depth_v0_eV : 0.0;
            } else if constexpr (std::is_same_v<T, Harmonic>) {
                // 1/2 m w^2 u^2 = (hbar w)^2 m_rel u^2 / (4 hbar^2/2me)
                const double hw = units::energy_quantum_eV(b.omega_per_s);
                const double u = x - b.center_nm;
                return hw * hw * m_rel_for_harmonic * u * u /
                       (4.0 * units::hbar2_over_2me_eV_nm2);
            } else {
                return b.offset_eV;
            }
        },
        base);
}

void validate_base(const BasePotentialSpec& base) {
    if (const auto* fw = std::get_if<FiniteWell>(&base)) {
        if (!(fw->depth_v0_eV > 0.0))
            throw Error("finite well depth must be positive, got " + std::to_string(fw->depth_v0_eV));
        if (!(fw->half_width_nm > 0.0))
            throw Error("finite well half width must be positive");
    }
    if (const auto* h = std::get_if<Harmonic>(&base)) {
        if (!(h->omega_per_s > 0.0)) throw Error("harmonic omega must be positive");
    }
}

void add_rectangular(std::vector<double>& v, const PseudoDeltaSpec& b, const Grid& grid) {
    if (b.epsilon < grid.dx * (1.0 - 1e-12)) {
        throw BarrierUnderResolved("rectangular barrier eps=" + std::to_string(b.epsilon) +
                                   " nm needs eps >= dx=" + std::to_string(grid.dx) + " nm");
    }
    const double height = b.strength_alpha_eV_nm / (2.0 * b.epsilon);
    const int k_lo = std::max(0, static_cast<int>(std::ceil(
                                     (b.center_nm - b.epsilon - edge_tol_nm - grid.x_min) / grid.dx)));
    const int k_hi = std::min(grid.n_points - 1,
                              static_cast<int>(std::floor(
                                  (b.center_nm + b.epsilon + edge_tol_nm - grid.x_min) / grid.dx)));
    if (k_hi - k_lo + 1 < 3) {
        throw BarrierUnderResolved("rectangular barrier at " + std::to_string(b.center_nm) +
                                   " nm spans fewer than 3 grid samples");
    }
    for (int k = k_lo; k <= k_hi; ++k) {
        const double u = std::abs(grid.x(k) - b.center_nm);
        const double w = (std::abs(u - b.epsilon) <= edge_tol_nm) ? 0.5 : 1.0;
        v[k] += w * height;
    }
}

}  // namespace

const char* shape_name(PseudoDeltaShape shape) {
    switch (shape) {
        case PseudoDeltaShape::rectangular: return "rectangular";
        case PseudoDeltaShape::gaussian: return "gaussian";
        case PseudoDeltaShape::lorentzian: return "lorentzian";
    }
    return "?";
}

PseudoDeltaShape shape_from_name(const std::string& name) {
    if (name == "rectangular") return PseudoDeltaShape::rectangular;
    if (name == "gaussian") return PseudoDeltaShape::gaussian;
    if (name == "lorentzian") return PseudoDeltaShape::lorentzian;
    throw Error("unknown pseudo-delta shape: " + name);
}

double pseudo_delta_value(const PseudoDeltaSpec& spec, double x) {
    const double u = x - spec.center_nm;
    switch (spec.shape) {
        case PseudoDeltaShape::rectangular:
            return std::abs(u) <= spec.epsilon ? 1.0 / (2.0 * spec.epsilon) : 0.0;
        case PseudoDeltaShape::gaussian:
            return std::exp(-u * u / (4.0 * spec.epsilon)) / (2.0 * std::sqrt(pi * spec.epsilon));
        case PseudoDeltaShape::lorentzian:
            return spec.epsilon / (pi * (u * u + spec.epsilon * spec.epsilon));
    }
    return 0.0;
}

std::vector<double> sample_potential(const PotentialSpec& spec, const Grid& grid,
                                     double m_rel_for_harmonic) {
    validate_base(spec.base);
    std::vector<double> v(grid.n_points);
    for (int k = 0; k < grid.n_points; ++k) {
        v[k] = base_value(spec.base, grid.x(k), m_rel_for_harmonic);
    }
    for (const auto& b : spec.barriers) {
        if (!(b.epsilon > 0.0)) throw Error("pseudo-delta epsilon must be positive");
        if (!(b.center_nm > grid.x_min && b.center_nm < grid.x_max)) {
            throw BarrierOutsideDomain("barrier center " + std::to_string(b.center_nm) +
                                       " nm not strictly inside the grid");
        }
        if (b.shape == PseudoDeltaShape::rectangular) {
            add_rectangular(v, b, grid);
        } else {
            for (int k = 0; k < grid.n_points; ++k) {
                v[k] += b.strength_alpha_eV_nm * pseudo_delta_value(b, grid.x(k));
            }
        }
    }
    return v;
}

std::vector<double> sample_mass(const MassProfileSpec& profile, const Grid& grid) {
    std::vector<double> m(grid.n_points);
    const double c = grid.center();
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantMass>) {
                std::fill(m.begin(), m.end(), p.m_rel);
            } else if constexpr (std::is_same_v<T, QuadraticMass>) {
                for (int k = 0; k < grid.n_points; ++k) {
                    const double u = grid.x(k) - c;
                    m[k] = p.a + p.b_per_nm2 * u * u;
                }
            } else if constexpr (std::is_same_v<T, GaussianBumpMass>) {
                for (int k = 0; k < grid.n_points; ++k) {
                    const double u = (grid.x(k) - c) / p.width_w_nm;
                    m[k] = p.base + p.amp * std::exp(-u * u);
                }
            } else {
                if (static_cast<int>(p.values.size()) != grid.n_points) {
                    throw DimensionMismatch("sampled mass profile has " +
                                            std::to_string(p.values.size()) + " values for a " +
                                            std::to_string(grid.n_points) + "-point grid");
                }
                m = p.values;
            }
        },
        profile);
    for (int k = 0; k < grid.n_points; ++k) {
        if (!(m[k] > 0.0)) {
            throw NonPositiveMass("m_rel(" + std::to_string(grid.x(k)) +
                                  " nm) = " + std::to_string(m[k]));
        }
    }
    return m;
}

MassDerivatives mass_derivatives(const MassProfileSpec& profile, const Grid& grid) {
    MassDerivatives d;
    d.first.assign(grid.n_points, 0.0);
    d.second.assign(grid.n_points, 0.0);
    const double c = grid.center();
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantMass>) {
                // zeros already in place
            } else if constexpr (std::is_same_v<T, QuadraticMass>) {
                for (int k = 0; k < grid.n_points; ++k) {
                    const double u = grid.x(k) - c;
                    d.first[k] = 2.0 * p.b_per_nm2 * u;
                    d.second[k] = 2.0 * p.b_per_nm2;
                }
            } else if constexpr (std::is_same_v<T, GaussianBumpMass>) {
                const double w2 = p.width_w_nm * p.width_w_nm;
                for (int k = 0; k < grid.n_points; ++k) {
                    const double u = grid.x(k) - c;
                    const double g = p.amp * std::exp(-u * u / w2);
                    d.first[k] = g * (-2.0 * u / w2);
                    d.second[k] = g * (4.0 * u * u / (w2 * w2) - 2.0 / w2);
                }
            } else {
                if (static_cast<int>(p.values.size()) != grid.n_points) {
                    throw DimensionMismatch("sampled mass profile has " +
                                            std::to_string(p.values.size()) + " values for a " +
                                            std::to_string(grid.n_points) + "-point grid");
                }
                kernels::derivative(p.values, grid.dx, d.first);
                kernels::second_derivative(p.values, grid.dx, d.second);
            }
        },
        profile);
    return d;
}

double mass_at_center(const MassProfileSpec& profile, const Grid& grid) {
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantMass>) {
                return p.m_rel;
            } else if constexpr (std::is_same_v<T, QuadraticMass>) {
                return p.a;
            } else if constexpr (std::is_same_v<T, GaussianBumpMass>) {
                return p.base + p.amp;
            } else {
                return p.values.at(nearest_index(grid, grid.center()));
            }
        },
        profile);
}

}
