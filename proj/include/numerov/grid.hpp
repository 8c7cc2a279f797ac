#pragma once

#include "numerov/errors.hpp"

namespace numerov {

/// Uniform spatial mesh over [x_min, x_max], lengths in nm.
///
/// Sample k sits at x_min + k*dx with dx = (x_max - x_min)/(n_points - 1).
/// Positions are always evaluated from this closed form, never by repeated
/// addition, so the mesh carries no accumulated drift.
struct Grid {
    double x_min = 0.0;   // nm
    double x_max = 0.0;   // nm
    int n_points = 0;
    double dx = 0.0;      // nm

    double x(int k) const { return x_min + k * dx; }
    double center() const { return 0.5 * (x_min + x_max); }
    bool contains(double x_val) const { return x_val >= x_min && x_val <= x_max; }
    int interior_points() const { return n_points - 2; }
};

/// Build a grid; requires n_points >= 3 and x_max > x_min.
Grid make_grid(double x_min, double x_max, int n_points);

/// Index of the sample nearest to x. Exact midpoints resolve to the lower
/// index. Throws OutOfDomain if x lies outside [x_min, x_max].
int nearest_index(const Grid& grid, double x);

}
