#include "transmon/noise.hpp"

#include "transmon/error.hpp"
#include "transmon/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace transmon {

std::string_view to_string(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::Charge: return "charge";
        case NoiseKind::Flux: return "flux";
        case NoiseKind::CriticalCurrent: return "critical_current";
    }
    return "?";
}

std::string_view to_string(Policy policy) {
    return policy == Policy::Fixed ? "fixed" : "worst_case";
}

std::string_view to_string(SlopeMethod method) {
    return method == SlopeMethod::FiniteDifference ? "finite_difference" : "hellmann_feynman";
}

std::pair<double, double> amplitude_range(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::Charge: return {1e-4, 1e-3};
        case NoiseKind::Flux: return {1e-6, 1e-5};
        case NoiseKind::CriticalCurrent: return {1e-7, 1e-6};
    }
    return {0.0, 0.0};
}

NoiseChannel NoiseChannel::with_default_amplitude(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::Charge: return {kind, 1e-4};
        case NoiseKind::Flux: return {kind, 1e-5};
        case NoiseKind::CriticalCurrent: return {kind, 1e-6};
    }
    return {kind, 0.0};
}

namespace {

CircuitParams at_point(CircuitParams params, const OperatingPoint& point) {
    params.ng = point.ng;
    params.phi_ext = point.phi_ext;
    return params;
}

// E01 as a function of the channel variable around `base`.
double e01_shifted(const CircuitParams& base, NoiseKind kind, double lambda, int ncut) {
    CircuitParams p = base;
    switch (kind) {
        case NoiseKind::Charge: p.ng = lambda; break;
        case NoiseKind::Flux: p.phi_ext = lambda; break;
        case NoiseKind::CriticalCurrent: p.ej_sum = base.ej_sum * (1.0 + lambda); break;
    }
    return e01_at(p, ncut);
}

double channel_value(const CircuitParams& p, NoiseKind kind) {
    switch (kind) {
        case NoiseKind::Charge: return p.ng;
        case NoiseKind::Flux: return p.phi_ext;
        case NoiseKind::CriticalCurrent: return 0.0;
    }
    return 0.0;
}

double channel_step(const numerics::FiniteDifferenceSteps& steps, NoiseKind kind) {
    switch (kind) {
        case NoiseKind::Charge: return steps.charge;
        case NoiseKind::Flux: return steps.flux;
        case NoiseKind::CriticalCurrent: return steps.critical_current;
    }
    return 0.0;
}

double fd_at(const CircuitParams& p, NoiseKind kind, int ncut,
             const numerics::FiniteDifferenceSteps& steps) {
    return std::abs(numerics::richardson_derivative(
        [&](double lambda) { return e01_shifted(p, kind, lambda, ncut); }, channel_value(p, kind),
        channel_step(steps, kind)));
}

// Off-diagonal ⟨n+1|∂Ĥ/∂λ|n⟩ (flux, critical current); charge is diagonal.
std::complex<double> derivative_hopping(const CircuitParams& p, NoiseKind kind) {
    if (kind == NoiseKind::CriticalCurrent) {
        return hopping_element(p);
    }
    const double angle = std::numbers::pi * p.phi_ext;
    const double scale = 0.5 * p.ej_sum * std::numbers::pi;
    return {scale * std::sin(angle), scale * p.d * std::cos(angle)};
}

double hf_at(const CircuitParams& p, NoiseKind kind, int ncut) {
    const HermitianMatrix h = build_hamiltonian(p, TruncationConfig{ncut, 0.0});
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.entries());
    if (solver.info() != Eigen::Success) {
        throw SolverFailure("dense Hermitian eigensolver did not converge");
    }
    const Eigen::VectorXd& energies = solver.eigenvalues();
    if (energies[1] - energies[0] < 1e-9) {
        throw DegeneratePair("E01 below 1e-9 GHz; Hellmann-Feynman needs a non-degenerate pair");
    }

    const Eigen::Index dim = h.dimension();
    Eigen::MatrixXcd dh = Eigen::MatrixXcd::Zero(dim, dim);
    if (kind == NoiseKind::Charge) {
        dh.diagonal() = (-8.0 * p.ec * charge_offsets(p, ncut)).cast<std::complex<double>>();
    } else {
        const std::complex<double> t = derivative_hopping(p, kind);
        for (Eigen::Index k = 0; k + 1 < dim; ++k) {
            dh(k + 1, k) = t;
            dh(k, k + 1) = std::conj(t);
        }
    }
    const auto expectation = [&](Eigen::Index level) {
        const auto v = solver.eigenvectors().col(level);
        return (v.adjoint() * dh * v).value().real();
    };
    return std::abs(expectation(1) - expectation(0));
}

OperatingPoint resolve(const CircuitParams& params, const TruncationConfig& trunc, NoiseKind kind,
                       const OperatingPoint& point, const numerics::FiniteDifferenceSteps& steps) {
    if (point.policy == Policy::Fixed) {
        return point;
    }
    return worst_case_point(at_point(params, point), trunc, kind, steps);
}

OperatingPoint flux_worst_case(const CircuitParams& params, int ncut,
                               const numerics::FiniteDifferenceSteps& steps) {
    constexpr int kGrid = 201;
    const double spacing = kFluxScanCap / (kGrid - 1);
    std::vector<double> e01(kGrid);
    CircuitParams probe = params;
    for (int k = 0; k < kGrid; ++k) {
        probe.phi_ext = (k == kGrid - 1) ? kFluxScanCap : k * spacing;
        e01[static_cast<std::size_t>(k)] = e01_at(probe, ncut);
    }
    int best = 1;
    double best_slope = -1.0;
    for (int k = 1; k + 1 < kGrid; ++k) {
        const double slope = std::abs(e01[static_cast<std::size_t>(k + 1)] -
                                      e01[static_cast<std::size_t>(k - 1)]);
        if (slope > best_slope) {
            best_slope = slope;
            best = k;
        }
    }
    const double x_tol = 1e-4 * 0.5;
    const auto refined = numerics::golden_section_max(
        [&](double phi) {
            CircuitParams p = params;
            p.phi_ext = phi;
            return fd_at(p, NoiseKind::Flux, ncut, steps);
        },
        (best - 1) * spacing, std::min((best + 1) * spacing, kFluxScanCap), x_tol);
    OperatingPoint point{params.ng, refined.x, Policy::WorstCase, false};
    point.clamped = kFluxScanCap - refined.x <= x_tol;
    return point;
}

}  // namespace

OperatingPoint worst_case_point(const CircuitParams& params, const TruncationConfig& trunc,
                                NoiseKind kind, const numerics::FiniteDifferenceSteps& steps) {
    const int ncut = converge_ncut(params, trunc);
    switch (kind) {
        case NoiseKind::Charge: {
            const DispersionResult dispersion = charge_dispersion_at(params, ncut, 101, steps.charge);
            return {dispersion.argmax_ng, params.phi_ext, Policy::WorstCase, false};
        }
        case NoiseKind::Flux: return flux_worst_case(params, ncut, steps);
        case NoiseKind::CriticalCurrent: return OperatingPoint::fixed_at(params);
    }
    return OperatingPoint::fixed_at(params);
}

double slope_fd(const CircuitParams& params, const TruncationConfig& trunc, NoiseKind kind,
                const OperatingPoint& point, const numerics::FiniteDifferenceSteps& steps) {
    const CircuitParams p = at_point(params, resolve(params, trunc, kind, point, steps));
    return fd_at(p, kind, converge_ncut(p, trunc), steps);
}

double slope_hf(const CircuitParams& params, const TruncationConfig& trunc, NoiseKind kind,
                const OperatingPoint& point) {
    const CircuitParams p = at_point(params, resolve(params, trunc, kind, point, {}));
    return hf_at(p, kind, converge_ncut(p, trunc));
}

Lifetime t2_from_slope(double amplitude, double slope_ghz) {
    if (!(slope_ghz > kSlopeFloor)) {
        return Lifetime::unbounded();
    }
    return Lifetime::from_seconds(1.0 / (2.0 * std::numbers::pi * amplitude * slope_ghz * 1e9));
}

T2Result t2_pure(const CircuitParams& params, const TruncationConfig& trunc,
                 const NoiseChannel& channel, const OperatingPoint& point,
                 const T2Options& options) {
    const std::string field = "amplitude_" + std::string(to_string(channel.kind));
    if (!std::isfinite(channel.amplitude)) {
        throw NonFiniteParameter(field);
    }
    if (!(channel.amplitude > 0.0)) {
        throw ValidationError(field, "must be > 0");
    }
    const auto [lo, hi] = amplitude_range(channel.kind);
    if (!options.allow_amplitude_outside_range && (channel.amplitude < lo || channel.amplitude > hi)) {
        throw ValidationError(field, "outside the typical 1/f range [" + std::to_string(lo) + ", " +
                                         std::to_string(hi) + "]; set the override to allow");
    }

    T2Result result;
    result.channel = channel;
    result.method = options.method;
    result.point = resolve(params, trunc, channel.kind, point, options.steps);
    const CircuitParams p = at_point(params, result.point);
    const int ncut = converge_ncut(p, trunc);
    result.slope = options.method == SlopeMethod::FiniteDifference
                       ? fd_at(p, channel.kind, ncut, options.steps)
                       : hf_at(p, channel.kind, ncut);
    result.t2 = t2_from_slope(channel.amplitude, result.slope);
    return result;
}

Lifetime combine_rates(const RateBudget& budget) {
    return Lifetime::from_rate(budget.t1.rate() / 2.0 + budget.t_phi.rate());
}

}  // namespace transmon
