#include "numerov/grid.hpp"

#include <cmath>
#include <string>

namespace numerov {

Grid make_grid(double x_min, double x_max, int n_points) {
    if (n_points < 3) {
        throw InvalidGrid("grid needs at least 3 points, got " + std::to_string(n_points));
    }
    if (!(x_max > x_min)) {
        throw InvalidGrid("grid domain is empty: x_min=" + std::to_string(x_min) +
                          " x_max=" + std::to_string(x_max));
    }
    Grid g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.n_points = n_points;
    g.dx = (x_max - x_min) / static_cast<double>(n_points - 1);
    return g;
}

int nearest_index(const Grid& grid, double x) {
    if (!grid.contains(x)) {
        throw OutOfDomain("x=" + std::to_string(x) + " outside [" + std::to_string(grid.x_min) +
                          ", " + std::to_string(grid.x_max) + "]");
    }
    const double t = (x - grid.x_min) / grid.dx;
    // ceil(t - 1/2) rounds halves down, which is the tie-toward-lower rule.
    int k = static_cast<int>(std::ceil(t - 0.5));
    if (k < 0) k = 0;
    if (k > grid.n_points - 1) k = grid.n_points - 1;
    return k;
}

}
