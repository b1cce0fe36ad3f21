// spectral.hpp — diagonalization, transition energies and charge dispersion.

#pragma once

#include "transmon/circuit_model.hpp"

#include <vector>

namespace transmon {

struct SpectrumResult {
    std::vector<double> energies;  // ascending, GHz
    double e01{0.0};
    double e12{0.0};
    double anharmonicity{0.0};  // e12 - e01
};

struct DispersionResult {
    double epsilon01{0.0};  // peak-to-peak E01 over ng, GHz
    double max_slope{0.0};  // max |∂E01/∂ng|, GHz per unit ng
    double argmax_ng{0.0};  // in [0, 0.5]
};

/// Lowest n_levels eigenvalues of h (n_levels >= 3). Tridiagonal input is reduced by a
/// diagonal phase gauge to a real symmetric tridiagonal and solved with LAPACK's MRRR
/// driver; anything else goes through a dense Hermitian solver. Throws SolverFailure.
SpectrumResult eigen_spectrum(const HermitianMatrix& h, int n_levels = 3);

/// E01 at a fixed truncation, no convergence check. Hot path for scans and derivatives.
double e01_at(const CircuitParams& params, int ncut);

/// Smallest ncut in {ncut, ncut+5, ...} whose E01 moves by less than the tolerance when ncut
/// grows by 5. Gives up after 10 escalations with NoConvergence.
int converge_ncut(const CircuitParams& params, const TruncationConfig& trunc);

/// energies[j] - energies[i] at the converged truncation; 0 <= i < j <= 2.
double transition_energy(const CircuitParams& params, const TruncationConfig& trunc, int i,
                         int j);

/// Scans ng over [0, 0.5] (E01 is even and 1-periodic in ng) and refines the steepest point.
DispersionResult charge_dispersion(const CircuitParams& params, const TruncationConfig& trunc,
                                   int grid_points = 101);

/// Same scan at a known-good ncut (skips convergence).
DispersionResult charge_dispersion_at(const CircuitParams& params, int ncut, int grid_points,
                                      double fd_step);

}  // namespace transmon
