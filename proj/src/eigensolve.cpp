#include "numerov/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "numerov/kernels.hpp"

// LAPACK dense symmetric eigensolver, subset by index (lowest modes).
extern "C" {
void dsyevr_(const char* jobz, const char* range, const char* uplo, const int* n, double* a,
             const int* lda, const double* vl, const double* vu, const int* il, const int* iu,
             const double* abstol, int* m, double* w, double* z, const int* ldz, int* isuppz,
             double* work, const int* lwork, int* iwork, const int* liwork, int* info);
}

namespace numerov {

namespace {

struct EighResult {
    std::vector<double> values;
    std::vector<double> vectors;  // column-major, n x m
};

EighResult eigh_lowest(DenseMatrix& h, int n_modes) {
    const int n = h.n;
    EighResult r;
    r.values.assign(n, 0.0);
    r.vectors.assign(static_cast<std::size_t>(n) * n_modes, 0.0);
    std::vector<int> isuppz(2 * std::max(1, n_modes));
    const int il = 1, iu = n_modes;
    const double vl = 0.0, vu = 0.0, abstol = 0.0;
    int m_found = 0, info = 0;

    int lwork = -1, liwork = -1;
    double work_query = 0.0;
    int iwork_query = 0;
    dsyevr_("V", "I", "U", &n, h.a.data(), &n, &vl, &vu, &il, &iu, &abstol, &m_found,
            r.values.data(), r.vectors.data(), &n, isuppz.data(), &work_query, &lwork,
            &iwork_query, &liwork, &info);
    if (info != 0) throw SolverFailure("eigensolver workspace query failed, info=" + std::to_string(info));

    lwork = static_cast<int>(work_query);
    liwork = iwork_query;
    std::vector<double> work(lwork);
    std::vector<int> iwork(liwork);
    dsyevr_("V", "I", "U", &n, h.a.data(), &n, &vl, &vu, &il, &iu, &abstol, &m_found,
            r.values.data(), r.vectors.data(), &n, isuppz.data(), work.data(), &lwork,
            iwork.data(), &liwork, &info);
    if (info != 0) throw SolverFailure("eigensolver did not converge, info=" + std::to_string(info));
    if (m_found < n_modes) {
        throw SolverFailure("eigensolver returned " + std::to_string(m_found) + " of " +
                            std::to_string(n_modes) + " modes");
    }
    r.values.resize(n_modes);
    return r;
}

void apply_sign_convention(std::vector<double>& psi) {
    std::size_t imax = 0;
    double amax = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const double a = std::abs(psi[i]);
        if (a > amax) {
            amax = a;
            imax = i;
        }
    }
    if (psi[imax] < 0.0) kernels::scale(psi, -1.0);
}

}  // namespace

std::vector<double> Spectrum::energies() const {
    std::vector<double> e;
    e.reserve(pairs.size());
    for (const auto& p : pairs) e.push_back(p.energy_eV);
    return e;
}

std::vector<double> derivative(std::span<const double> psi, const Grid& grid) {
    if (static_cast<int>(psi.size()) != grid.n_points) {
        throw DimensionMismatch("derivative: psi length " + std::to_string(psi.size()) +
                                " vs grid " + std::to_string(grid.n_points));
    }
    std::vector<double> out(psi.size());
    kernels::derivative(psi, grid.dx, out);
    return out;
}

std::vector<double> normalize(std::span<const double> psi, const Grid& grid) {
    if (static_cast<int>(psi.size()) != grid.n_points) {
        throw DimensionMismatch("normalize: psi length " + std::to_string(psi.size()) +
                                " vs grid " + std::to_string(grid.n_points));
    }
    std::vector<double> out(psi.begin(), psi.end());
    std::vector<double> sq(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) sq[i] = psi[i] * psi[i];
    const double norm2 = kernels::trapezoid(sq, grid.dx);
    if (!(norm2 > 0.0)) throw ZeroVector("cannot normalize an identically zero wavefunction");
    kernels::scale(out, 1.0 / std::sqrt(norm2));
    apply_sign_convention(out);
    return out;
}

Spectrum solve(const HamiltonianSystem& system, int n_modes) {
    const int n_int = system.dim();
    if (n_modes < 1 || n_modes > n_int) {
        throw ModeCountTooLarge("n_modes=" + std::to_string(n_modes) + " exceeds the " +
                                std::to_string(n_int) + " interior samples");
    }
    DenseMatrix h = dense_hamiltonian(system);
    EighResult eig = eigh_lowest(h, n_modes);

    Spectrum spectrum;
    spectrum.system_kind = system.kind;
    spectrum.grid = system.grid;
    spectrum.pairs.reserve(n_modes);

    const bool pdm = system.kind == SystemKind::position_dependent_mass;
    for (int j = 0; j < n_modes; ++j) {
        Eigenpair pair;
        pair.mode_index = j;
        pair.energy_eV = eig.values[j];
        // The solver works on y = D^{1/2} xi with D = diag(m_rel), so
        // xi = D^{-1/2} y and the physical psi = sqrt(m_rel) xi = y: the
        // similarity factor cancels and the raw eigenvector already IS psi
        // (up to normalization). Both grid ends carry the Dirichlet zeros.
        pair.psi.assign(system.grid.n_points, 0.0);
        const double* col = eig.vectors.data() + static_cast<std::size_t>(j) * n_int;
        std::copy(col, col + n_int, pair.psi.begin() + 1);
        pair.psi = normalize(pair.psi, system.grid);
        if (pdm) {
            pair.xi.resize(system.grid.n_points);
            pair.xi.front() = 0.0;
            pair.xi.back() = 0.0;
            for (int i = 0; i < n_int; ++i) {
                pair.xi[i + 1] = pair.psi[i + 1] / std::sqrt(system.m_rel_diag[i]);
            }
        }
        pair.dpsi_dx = derivative(pair.psi, system.grid);
        spectrum.pairs.push_back(std::move(pair));
    }

    for (int j = 1; j < n_modes; ++j) {
        if (spectrum.pairs[j].energy_eV < spectrum.pairs[j - 1].energy_eV) {
            throw SolverFailure("eigenvalues not in ascending order");
        }
    }
    return spectrum;
}

}
