#pragma once

#include <variant>
#include <vector>

#include "numerov/grid.hpp"

namespace numerov {

enum class PseudoDeltaShape { rectangular, gaussian, lorentzian };

const char* shape_name(PseudoDeltaShape shape);
PseudoDeltaShape shape_from_name(const std::string& name);

/// Finite-width stand-in for alpha * delta(x - center).
///
/// epsilon is the width parameter: for the rectangular and lorentzian shapes
/// it is a half-width in nm; for the gaussian shape it enters as
/// exp(-u^2 / (4 epsilon)) and therefore carries units of nm^2.
struct PseudoDeltaSpec {
    double center_nm = 0.0;
    double strength_alpha_eV_nm = 0.0;  // > 0 repulsive, < 0 attractive
    double epsilon = 0.0;
    PseudoDeltaShape shape = PseudoDeltaShape::rectangular;
};

/// Walls realized exactly by the Dirichlet boundary of the matrix method.
struct InfiniteWell {};

/// -V0 inside |x - center| <= half_width, 0 outside (bound states at E < 0).
struct FiniteWell {
    double depth_v0_eV = 0.0;
    double half_width_nm = 0.0;
    double center_nm = 0.0;
};

/// V = 1/2 m omega^2 (x - center)^2; the mass entering the curvature is
/// passed separately at sampling time.
struct Harmonic {
    double omega_per_s = 0.0;
    double center_nm = 0.0;
};

struct Flat {
    double offset_eV = 0.0;
};

using BasePotentialSpec = std::variant<InfiniteWell, FiniteWell, Harmonic, Flat>;

struct PotentialSpec {
    BasePotentialSpec base;
    std::vector<PseudoDeltaSpec> barriers;
};

struct ConstantMass { double m_rel = 1.0; };
struct QuadraticMass { double a = 0.0; double b_per_nm2 = 0.0; };  // m_rel = a + b u^2
struct GaussianBumpMass { double base = 0.0; double amp = 0.0; double width_w_nm = 1.0; };
struct SampledMass { std::vector<double> values; };
using MassProfileSpec = std::variant<ConstantMass, QuadraticMass, GaussianBumpMass, SampledMass>;

/// Pointwise value of the pseudo-delta density at x, in nm^-1.
/// The rectangular shape is 1/(2 eps) on the closed interval
/// [center - eps, center + eps] and 0 outside.
double pseudo_delta_value(const PseudoDeltaSpec& spec, double x);

/// Sample V(x_k) = base(x_k) + sum_i alpha_i * delta_p(x_k - x_i) on the grid,
/// in eV. m_rel_for_harmonic is the mass ratio entering the harmonic
/// curvature (ignored by the other base variants).
///
/// Rectangular barriers are sampled quadrature-consistently: a sample that
/// falls exactly on a support edge takes half the plateau value, so the
/// sampled barrier carries the discrete strength alpha exactly whenever the
/// edges land on the mesh. Each rectangular barrier must satisfy eps >= dx
/// and cover at least 3 samples.
std::vector<double> sample_potential(const PotentialSpec& spec, const Grid& grid,
                                     double m_rel_for_harmonic);

/// Sample m_rel(x_k) on the grid. Quadratic and gaussian-bump profiles
/// measure x from the grid's symmetry center, in nm. Throws NonPositiveMass
/// if any sample is <= 0.
std::vector<double> sample_mass(const MassProfileSpec& profile, const Grid& grid);

struct MassDerivatives {
    std::vector<double> first;   // dm_rel/dx, nm^-1
    std::vector<double> second;  // d2m_rel/dx2, nm^-2
};

/// Analytic derivatives for the closed-form profiles; second-order finite
/// differences (one-sided at the endpoints) for the sampled variant.
MassDerivatives mass_derivatives(const MassProfileSpec& profile, const Grid& grid);

/// m_rel at the grid's symmetry center; convenience for harmonic defaults.
double mass_at_center(const MassProfileSpec& profile, const Grid& grid);

}
