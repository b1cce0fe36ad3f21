#include "transmon/circuit_model.hpp"

#include "transmon/error.hpp"

#include <cmath>
#include <numbers>

namespace transmon {

namespace {

void require_finite(double value, const char* field) {
    if (!std::isfinite(value)) {
        throw NonFiniteParameter(field);
    }
}

}  // namespace

void CircuitParams::validate() const {
    require_finite(ej_sum, "ej_sum");
    require_finite(ec, "ec");
    require_finite(d, "d");
    require_finite(ng, "ng");
    require_finite(phi_ext, "phi_ext");
    if (ej_sum < 0.0) {
        throw ValidationError("ej_sum", "must satisfy ej_sum >= 0");
    }
    if (!(ec > 0.0)) {
        throw ValidationError("ec", "must satisfy ec > 0");
    }
    if (d < 0.0 || d >= 1.0) {
        throw ValidationError("d", "must satisfy 0 <= d < 1");
    }
}

void TruncationConfig::validate() const {
    if (ncut < 2) {
        throw ValidationError("ncut", "must satisfy ncut >= 2");
    }
    if (!std::isfinite(convergence_tol_ghz)) {
        throw NonFiniteParameter("convergence_tol_ghz");
    }
    if (convergence_tol_ghz < 0.0) {
        throw ValidationError("convergence_tol_ghz", "must satisfy convergence_tol_ghz >= 0");
    }
}

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        throw ValidationError("matrix", "must be square and non-empty");
    }
    const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
        for (Eigen::Index j = i; j < entries_.cols(); ++j) {
            if (std::abs(entries_(i, j) - std::conj(entries_(j, i))) > 1e-12 * scale) {
                throw ValidationError("matrix", "is not Hermitian");
            }
        }
    }
}

bool HermitianMatrix::is_tridiagonal() const {
    const Eigen::Index n = dimension();
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = j + 2; i < n; ++i) {
            if (entries_(i, j) != 0.0 || entries_(j, i) != 0.0) {
                return false;
            }
        }
    }
    return true;
}

std::complex<double> hopping_element(const CircuitParams& params) {
    const double angle = std::numbers::pi * params.phi_ext;
    const double half = 0.5 * params.ej_sum;
    return {-half * std::cos(angle), half * params.d * std::sin(angle)};
}

double effective_ej(const CircuitParams& params) {
    const double angle = std::numbers::pi * params.phi_ext;
    return params.ej_sum * std::hypot(std::cos(angle), params.d * std::sin(angle));
}

Eigen::VectorXd charge_offsets(const CircuitParams& params, int ncut) {
    Eigen::VectorXd offsets(2 * ncut + 1);
    for (int k = 0; k < offsets.size(); ++k) {
        offsets[k] = static_cast<double>(k - ncut) - params.ng;
    }
    return offsets;
}

HermitianMatrix build_hamiltonian(const CircuitParams& params, const TruncationConfig& trunc) {
    params.validate();
    // A single-step basis is still a well-formed matrix; ncut >= 2 is enforced where levels
    // 0..2 are consumed.
    if (trunc.ncut < 1) {
        throw ValidationError("ncut", "must satisfy ncut >= 1");
    }

    const int dim = trunc.dimension();
    const Eigen::VectorXd offsets = charge_offsets(params, trunc.ncut);
    const std::complex<double> hop = hopping_element(params);

    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        h(k, k) = 4.0 * params.ec * offsets[k] * offsets[k];
    }
    for (int k = 0; k + 1 < dim; ++k) {
        h(k + 1, k) = hop;
        h(k, k + 1) = std::conj(hop);
    }
    return HermitianMatrix(std::move(h));
}

}  // namespace transmon
