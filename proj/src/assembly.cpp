#include "numerov/assembly.hpp"

#include <cmath>
#include <string>

#include "numerov/kernels.hpp"
#include "numerov/units.hpp"

namespace numerov {

namespace {

// LDL^T factorization of a symmetric positive-definite tridiagonal matrix.
// B is strictly diagonally dominant, so no pivoting is needed.
struct SpdTridiagFactor {
    std::vector<double> d;  // pivots
    std::vector<double> l;  // subdiagonal multipliers

    explicit SpdTridiagFactor(const TridiagonalSymmetric& t) {
        const int n = t.dim();
        d.resize(n);
        l.resize(n > 0 ? n - 1 : 0);
        d[0] = t.diagonal[0];
        for (int i = 1; i < n; ++i) {
            l[i - 1] = t.off_diagonal[i - 1] / d[i - 1];
            d[i] = t.diagonal[i] - l[i - 1] * t.off_diagonal[i - 1];
        }
    }

    void solve_in_place(std::span<double> rhs) const {
        const int n = static_cast<int>(d.size());
        for (int i = 1; i < n; ++i) rhs[i] -= l[i - 1] * rhs[i - 1];
        rhs[n - 1] /= d[n - 1];
        for (int i = n - 2; i >= 0; --i) rhs[i] = rhs[i] / d[i] - l[i] * rhs[i + 1];
    }
};

void require_full_grid_size(const Grid& grid, std::size_t got, const char* what) {
    if (got != static_cast<std::size_t>(grid.n_points)) {
        throw DimensionMismatch(std::string(what) + " has " + std::to_string(got) +
                                " samples for a " + std::to_string(grid.n_points) +
                                "-point grid");
    }
}

// Writes columns of -(scale) * B^{-1} A + diag(v) into H, solving
// B x_j = A e_j with the factorization of B. A is tridiagonal, so each
// right-hand side has at most three nonzeros.
void form_dense(const HamiltonianSystem& sys, double scale_times_minus,
                std::span<const double> inv_sqrt_m, DenseMatrix& h) {
    const int n = sys.dim();
    const SpdTridiagFactor fac(sys.b);
    std::vector<double> col(n);
    for (int j = 0; j < n; ++j) {
        std::fill(col.begin(), col.end(), 0.0);
        col[j] = sys.a.diagonal[j];
        if (j > 0) col[j - 1] = sys.a.off_diagonal[j - 1];
        if (j + 1 < n) col[j + 1] = sys.a.off_diagonal[j];
        fac.solve_in_place(col);
        double* out = &h.at(0, j);
        if (inv_sqrt_m.empty()) {
            for (int i = 0; i < n; ++i) out[i] = scale_times_minus * col[i];
        } else {
            const double sj = inv_sqrt_m[j];
            for (int i = 0; i < n; ++i) out[i] = scale_times_minus * sj * inv_sqrt_m[i] * col[i];
        }
        out[j] += sys.v_diag[j];
    }
}

}  // namespace

void TridiagonalSymmetric::apply(std::span<const double> x, std::span<double> y) const {
    kernels::tridiagonal_apply(diagonal, off_diagonal, x, y);
}

DenseMatrix DenseMatrix::zero(int n) {
    DenseMatrix m;
    m.n = n;
    m.a.assign(static_cast<std::size_t>(n) * n, 0.0);
    return m;
}

TridiagonalSymmetric build_A(const Grid& grid) {
    const int n = grid.interior_points();
    const double inv_dx2 = 1.0 / (grid.dx * grid.dx);
    TridiagonalSymmetric t;
    t.diagonal.assign(n, -2.0 * inv_dx2);
    t.off_diagonal.assign(n - 1, inv_dx2);
    return t;
}

TridiagonalSymmetric build_B(const Grid& grid) {
    const int n = grid.interior_points();
    TridiagonalSymmetric t;
    t.diagonal.assign(n, 10.0 / 12.0);
    t.off_diagonal.assign(n - 1, 1.0 / 12.0);
    return t;
}

HamiltonianSystem assemble_constant_mass(const Grid& grid, std::span<const double> v_samples,
                                         double m_rel) {
    require_full_grid_size(grid, v_samples.size(), "potential");
    if (!(m_rel > 0.0)) throw NonPositiveMass("m_rel = " + std::to_string(m_rel));
    HamiltonianSystem sys;
    sys.kind = SystemKind::constant_mass;
    sys.grid = grid;
    sys.a = build_A(grid);
    sys.b = build_B(grid);
    sys.v_diag.assign(v_samples.begin() + 1, v_samples.end() - 1);
    sys.m_rel_diag.assign(grid.interior_points(), m_rel);
    return sys;
}

std::vector<double> effective_potential(std::span<const double> v_samples,
                                        const MassProfileSpec& profile, const Grid& grid,
                                        double r, double s) {
    require_full_grid_size(grid, v_samples.size(), "potential");
    const std::vector<double> m = sample_mass(profile, grid);
    const MassDerivatives dm = mass_derivatives(profile, grid);
    const double h2 = units::hbar2_over_2me_eV_nm2;
    std::vector<double> v_eff(v_samples.begin(), v_samples.end());
    for (int k = 0; k < grid.n_points; ++k) {
        // hbar^2 (1+r) m''/(4 m^2) = (1+r) h2 m_rel'' / (2 m_rel^2), and
        // hbar^2 (3/4 + s/2) m'^2/(2 m^3) = (3/4 + s/2) h2 m_rel'^2 / m_rel^3,
        // with all masses in units of m_e.
        const double m2 = m[k] * m[k];
        const double term1 = (1.0 + r) * h2 * dm.second[k] / (2.0 * m2);
        const double term2 = (0.75 + 0.5 * s) * h2 * dm.first[k] * dm.first[k] / (m2 * m[k]);
        v_eff[k] -= term1 - term2;
    }
    return v_eff;
}

HamiltonianSystem assemble_pdm(const Grid& grid, std::span<const double> v_eff_samples,
                               std::span<const double> m_rel_samples) {
    require_full_grid_size(grid, v_eff_samples.size(), "effective potential");
    require_full_grid_size(grid, m_rel_samples.size(), "mass profile");
    for (double m : m_rel_samples) {
        if (!(m > 0.0)) throw NonPositiveMass("m_rel sample = " + std::to_string(m));
    }
    HamiltonianSystem sys;
    sys.kind = SystemKind::position_dependent_mass;
    sys.grid = grid;
    sys.a = build_A(grid);
    sys.b = build_B(grid);
    sys.v_diag.assign(v_eff_samples.begin() + 1, v_eff_samples.end() - 1);
    sys.m_rel_diag.assign(m_rel_samples.begin() + 1, m_rel_samples.end() - 1);
    return sys;
}

DenseMatrix dense_hamiltonian(const HamiltonianSystem& sys) {
    const int n = sys.dim();
    DenseMatrix h = DenseMatrix::zero(n);
    const double h2 = units::hbar2_over_2me_eV_nm2;
    if (sys.kind == SystemKind::constant_mass) {
        form_dense(sys, -h2 / sys.m_rel_diag[0], {}, h);
    } else {
        std::vector<double> inv_sqrt_m(n);
        for (int i = 0; i < n; ++i) inv_sqrt_m[i] = 1.0 / std::sqrt(sys.m_rel_diag[i]);
        form_dense(sys, -h2, inv_sqrt_m, h);
    }
    return h;
}

DenseMatrix dense_pdm_mass_matrix(const HamiltonianSystem& sys) {
    const int n = sys.dim();
    DenseMatrix m = DenseMatrix::zero(n);
    // M = B diag(m_rel): right-multiplication scales column j by m_rel(x_j),
    // which is exactly the shifted-diagonal mass placement of the stencil.
    for (int j = 0; j < n; ++j) {
        m.at(j, j) = sys.b.diagonal[j] * sys.m_rel_diag[j];
        if (j > 0) m.at(j - 1, j) = sys.b.off_diagonal[j - 1] * sys.m_rel_diag[j];
        if (j + 1 < n) m.at(j + 1, j) = sys.b.off_diagonal[j] * sys.m_rel_diag[j];
    }
    return m;
}

}
