#include "transmon/spectral.hpp"

#include "transmon/error.hpp"
#include "transmon/numerics.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <string>

namespace transmon {

namespace {

constexpr int kMaxEscalations = 10;
constexpr int kNcutStep = 5;

SpectrumResult finish(std::vector<double> energies) {
    SpectrumResult result;
    result.energies = std::move(energies);
    result.e01 = result.energies[1] - result.energies[0];
    result.e12 = result.energies[2] - result.energies[1];
    result.anharmonicity = result.e12 - result.e01;
    return result;
}

// The phase gauge diag(e^{i k θ_k}) maps any Hermitian tridiagonal matrix onto the real
// one with off-diagonals |h(k+1,k)|; eigenvalues are unchanged.
std::vector<double> tridiagonal_levels(std::vector<double> diag, std::vector<double> off,
                                       int n_levels) {
    const lapack_int n = static_cast<lapack_int>(diag.size());
    off.resize(diag.size(), 0.0);  // dstemr uses e[n-1] as workspace
    std::vector<double> w(diag.size());
    std::vector<lapack_int> isuppz(2 * diag.size());
    lapack_int found = 0;
    lapack_logical tryrac = 1;
    double unused_z = 0.0;
    const lapack_int info =
        LAPACKE_dstemr(LAPACK_COL_MAJOR, 'N', 'A', n, diag.data(), off.data(), 0.0, 0.0, 0, 0,
                       &found, w.data(), &unused_z, 1, n, isuppz.data(), &tryrac);
    if (info != 0 || found != n) {
        throw SolverFailure("tridiagonal eigensolver failed (dstemr info " +
                            std::to_string(info) + ")");
    }
    for (double value : w) {
        if (!std::isfinite(value)) {
            throw SolverFailure("tridiagonal eigensolver returned a non-finite eigenvalue");
        }
    }
    w.resize(static_cast<std::size_t>(n_levels));
    return w;
}

std::vector<double> dense_levels(const Eigen::MatrixXcd& m, int n_levels) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw SolverFailure("dense Hermitian eigensolver did not converge");
    }
    const Eigen::VectorXd& values = solver.eigenvalues();
    return {values.data(), values.data() + n_levels};
}

double e01_from_tridiagonal(const CircuitParams& params, int ncut) {
    const int dim = 2 * ncut + 1;
    std::vector<double> diag(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        const double offset = static_cast<double>(k - ncut) - params.ng;
        diag[static_cast<std::size_t>(k)] = 4.0 * params.ec * offset * offset;
    }
    std::vector<double> off(static_cast<std::size_t>(dim - 1), std::abs(hopping_element(params)));
    const auto levels = tridiagonal_levels(std::move(diag), std::move(off), 2);
    return levels[1] - levels[0];
}

}  // namespace

SpectrumResult eigen_spectrum(const HermitianMatrix& h, int n_levels) {
    if (n_levels < 3 || n_levels > h.dimension()) {
        throw ValidationError("n_levels", "must satisfy 3 <= n_levels <= dimension");
    }
    const auto n = h.dimension();
    if (h.is_tridiagonal()) {
        std::vector<double> diag(static_cast<std::size_t>(n));
        std::vector<double> off(static_cast<std::size_t>(n - 1));
        for (Eigen::Index k = 0; k < n; ++k) {
            diag[static_cast<std::size_t>(k)] = h(k, k).real();
            if (k + 1 < n) {
                off[static_cast<std::size_t>(k)] = std::abs(h(k + 1, k));
            }
        }
        return finish(tridiagonal_levels(std::move(diag), std::move(off), n_levels));
    }
    return finish(dense_levels(h.entries(), n_levels));
}

double e01_at(const CircuitParams& params, int ncut) {
    return e01_from_tridiagonal(params, ncut);
}

int converge_ncut(const CircuitParams& params, const TruncationConfig& trunc) {
    params.validate();
    trunc.validate();
    int ncut = trunc.ncut;
    double current = e01_at(params, ncut);
    for (int escalation = 0; escalation <= kMaxEscalations; ++escalation) {
        const double next = e01_at(params, ncut + kNcutStep);
        if (std::abs(next - current) < trunc.convergence_tol_ghz) {
            return ncut;
        }
        if (escalation == kMaxEscalations) {
            throw NoConvergence(current, next, ncut + kNcutStep);
        }
        ncut += kNcutStep;
        current = next;
    }
    return ncut;  // unreachable
}

double transition_energy(const CircuitParams& params, const TruncationConfig& trunc, int i,
                         int j) {
    if (i < 0 || i >= j || j > 2) {
        throw ValidationError("levels", "must satisfy 0 <= i < j <= 2");
    }
    const TruncationConfig converged{converge_ncut(params, trunc), trunc.convergence_tol_ghz};
    const SpectrumResult spectrum = eigen_spectrum(build_hamiltonian(params, converged), 3);
    return spectrum.energies[static_cast<std::size_t>(j)] -
           spectrum.energies[static_cast<std::size_t>(i)];
}

DispersionResult charge_dispersion_at(const CircuitParams& params, int ncut, int grid_points,
                                      double fd_step) {
    if (grid_points < 21) {
        throw ValidationError("grid_points", "must satisfy grid_points >= 21");
    }
    const double spacing = 0.5 / (grid_points - 1);
    std::vector<double> e01(static_cast<std::size_t>(grid_points));
    CircuitParams at = params;
    for (int k = 0; k < grid_points; ++k) {
        at.ng = (k == grid_points - 1) ? 0.5 : k * spacing;
        e01[static_cast<std::size_t>(k)] = e01_at(at, ncut);
    }

    DispersionResult result;
    const auto [lo, hi] = std::minmax_element(e01.begin(), e01.end());
    result.epsilon01 = *hi - *lo;

    int best = 1;
    double best_slope = -1.0;
    for (int k = 1; k + 1 < grid_points; ++k) {
        const double slope = std::abs(e01[static_cast<std::size_t>(k + 1)] -
                                      e01[static_cast<std::size_t>(k - 1)]) /
                             (2.0 * spacing);
        if (slope > best_slope) {
            best_slope = slope;
            best = k;
        }
    }

    auto abs_slope = [&](double ng) {
        CircuitParams probe = params;
        return std::abs(numerics::richardson_derivative(
            [&](double x) {
                probe.ng = x;
                return e01_at(probe, ncut);
            },
            ng, fd_step));
    };
    const auto refined = numerics::golden_section_max(abs_slope, (best - 1) * spacing,
                                                      (best + 1) * spacing, 1e-4 * 0.5);
    // The grid estimate wins only where the stencil straddles a kink (EJ = 0 limit).
    if (refined.value >= best_slope) {
        result.max_slope = refined.value;
        result.argmax_ng = std::clamp(refined.x, 0.0, 0.5);
    } else {
        result.max_slope = best_slope;
        result.argmax_ng = best * spacing;
    }
    return result;
}

DispersionResult charge_dispersion(const CircuitParams& params, const TruncationConfig& trunc,
                                   int grid_points) {
    const int ncut = converge_ncut(params, trunc);
    return charge_dispersion_at(params, ncut, grid_points, numerics::FiniteDifferenceSteps{}.charge);
}

}  // namespace transmon
