// noise.hpp — 1/f-noise sensitivity of E01 and the resulting dephasing times.
//
// With E01 kept as a linear frequency ν01 in GHz, T2 = ħ / (A |∂E01/∂λ|) becomes
//   T2 [s] = 1 / (2π · A · |∂ν01/∂λ| · 1e9).
// λ is ng for charge noise, Φ/Φ0 for flux noise and the common-mode fractional deviation δ
// (EJΣ -> EJΣ (1 + δ)) for critical-current noise.

#pragma once

#include "transmon/circuit_model.hpp"
#include "transmon/lifetime.hpp"
#include "transmon/numerics.hpp"

#include <array>
#include <string_view>
#include <utility>

namespace transmon {

enum class NoiseKind { Charge, Flux, CriticalCurrent };

inline constexpr std::array<NoiseKind, 3> kAllNoiseKinds{NoiseKind::Charge, NoiseKind::Flux,
                                                        NoiseKind::CriticalCurrent};

std::string_view to_string(NoiseKind kind);

/// Typical 1/f amplitude range: charge in e, flux in Φ0, critical current as a fraction of Ic.
std::pair<double, double> amplitude_range(NoiseKind kind);

struct NoiseChannel {
    NoiseKind kind{NoiseKind::Charge};
    double amplitude{1e-4};

    /// 1e-4 (charge), 1e-5 (flux), 1e-6 (critical current).
    static NoiseChannel with_default_amplitude(NoiseKind kind);
};

enum class Policy { Fixed, WorstCase };

std::string_view to_string(Policy policy);

struct OperatingPoint {
    double ng{0.5};
    double phi_ext{0.0};
    Policy policy{Policy::Fixed};
    bool clamped{false};  // worst-case scan hit its upper cap

    static OperatingPoint fixed_at(const CircuitParams& params) {
        return {params.ng, params.phi_ext, Policy::Fixed, false};
    }
    static OperatingPoint worst_case_from(const CircuitParams& params) {
        return {params.ng, params.phi_ext, Policy::WorstCase, false};
    }
};

enum class SlopeMethod { FiniteDifference, HellmannFeynman };

std::string_view to_string(SlopeMethod method);

/// Slopes below this (GHz per unit λ) are treated as exactly zero.
inline constexpr double kSlopeFloor = 1e-12;

/// Upper edge of the flux worst-case scan.
inline constexpr double kFluxScanCap = 0.5 - 1e-3;

struct T2Result {
    NoiseChannel channel;
    double slope{0.0};  // |∂E01/∂λ|, GHz per unit λ
    Lifetime t2{Lifetime::unbounded()};
    OperatingPoint point;
    SlopeMethod method{SlopeMethod::FiniteDifference};
};

struct RateBudget {
    Lifetime t1{Lifetime::unbounded()};
    Lifetime t_phi{Lifetime::unbounded()};
};

struct T2Options {
    SlopeMethod method{SlopeMethod::FiniteDifference};
    numerics::FiniteDifferenceSteps steps{};
    bool allow_amplitude_outside_range{false};
};

/// |∂E01/∂λ| from a Richardson-extrapolated 5-point stencil. A WorstCase point is resolved
/// first.
double slope_fd(const CircuitParams& params, const TruncationConfig& trunc, NoiseKind kind,
                const OperatingPoint& point, const numerics::FiniteDifferenceSteps& steps = {});

/// |⟨1|∂Ĥ/∂λ|1⟩ - ⟨0|∂Ĥ/∂λ|0⟩| from eigenvectors of the dense Hamiltonian.
/// Throws DegeneratePair when E01 < 1e-9 GHz.
double slope_hf(const CircuitParams& params, const TruncationConfig& trunc, NoiseKind kind,
                const OperatingPoint& point);

/// Operating point maximizing |∂E01/∂λ| for the channel's own variable; the other
/// variable stays at params' value. Critical current returns params' bias unchanged.
OperatingPoint worst_case_point(const CircuitParams& params, const TruncationConfig& trunc,
                                NoiseKind kind,
                                const numerics::FiniteDifferenceSteps& steps = {});

T2Result t2_pure(const CircuitParams& params, const TruncationConfig& trunc,
                 const NoiseChannel& channel, const OperatingPoint& point,
                 const T2Options& options = {});

/// 1/T2 = 1/(2 T1) + 1/Tφ, Unbounded meaning zero rate.
Lifetime combine_rates(const RateBudget& budget);

/// T2 from a slope, 1 / (2π A slope 1e9); Unbounded below kSlopeFloor.
Lifetime t2_from_slope(double amplitude, double slope_ghz);

}  // namespace transmon
