// circuit_model.hpp — split-junction transmon parameters and the charge-basis Hamiltonian.
//
// Energies are linear frequencies E/h in GHz throughout. The junction term
//   -EJΣ cos(πφ) [cos φ̂ + d tan(πφ) sin φ̂]
// is built in the equivalent pole-free form
//   -EJΣ [cos(πφ) cos φ̂ + d sin(πφ) sin φ̂],
// with cos φ̂ = (S⁺ + S⁻)/2, sin φ̂ = (S⁺ - S⁻)/(2i) and S⁺|n⟩ = |n+1⟩, so φext = 1/2
// is an ordinary point.

#pragma once

#include <Eigen/Dense>

#include <complex>

namespace transmon {

struct CircuitParams {
    double ej_sum{20.0};  // GHz, sum of both junction energies
    double ec{0.35};      // GHz
    double d{0.1};        // junction asymmetry, [0, 1)
    double ng{0.5};       // offset charge, Cooper-pair units
    double phi_ext{0.0};  // Φ/Φ0

    double ratio() const { return ej_sum / ec; }

    /// Throws NonFiniteParameter / ValidationError on a bad field.
    void validate() const;
};

struct TruncationConfig {
    int ncut{30};
    double convergence_tol_ghz{1e-10};

    int dimension() const { return 2 * ncut + 1; }
    void validate() const;
};

/// Dense Hermitian matrix; construction checks the Hermitian property.
class HermitianMatrix {
public:
    explicit HermitianMatrix(Eigen::MatrixXcd entries);

    Eigen::Index dimension() const { return entries_.rows(); }
    const Eigen::MatrixXcd& entries() const { return entries_; }
    std::complex<double> operator()(Eigen::Index row, Eigen::Index col) const {
        return entries_(row, col);
    }

    /// True when every entry outside the main and first off-diagonals is zero.
    bool is_tridiagonal() const;

private:
    Eigen::MatrixXcd entries_;
};

/// ⟨n+1|Ĥ|n⟩ for the junction term; constant along the off-diagonal.
std::complex<double> hopping_element(const CircuitParams& params);

/// Effective Josephson energy of the SQUID, EJΣ sqrt(cos²πφ + d² sin²πφ).
double effective_ej(const CircuitParams& params);

HermitianMatrix build_hamiltonian(const CircuitParams& params, const TruncationConfig& trunc);

/// Charge operator n̂ - ng on the same basis (diagonal).
Eigen::VectorXd charge_offsets(const CircuitParams& params, int ncut);

}  // namespace transmon
