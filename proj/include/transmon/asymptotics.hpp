// asymptotics.hpp — closed-form T2 scaling laws, calibrated at a reference point.
//
//   charge:           T2 ∝ exp(sqrt(EJΣ/Ec))
//   flux:             T2 ∝ (2 Ec EJΣ)^(-1/2)
//   critical current: T2 ∝ EJΣ^(-1/2)          (Ic ∝ EJΣ)

#pragma once

#include "transmon/circuit_model.hpp"
#include "transmon/noise.hpp"

#include <vector>

namespace transmon {

enum class AsymptoticKind { ChargeExp, FluxInvSqrt, IcInvSqrt };

AsymptoticKind asymptotic_kind_for(NoiseKind kind);

/// Unnormalized scaling law evaluated at params.
double shape(AsymptoticKind kind, const CircuitParams& params);

struct AsymptoticModel {
    AsymptoticKind kind{AsymptoticKind::ChargeExp};
    double prefactor{0.0};  // reference T2 / shape(reference)
    CircuitParams reference_params;
    T2Result reference;
};

/// Throws UnboundedReference when the reference T2 is not finite.
AsymptoticModel calibrate(AsymptoticKind kind, const CircuitParams& reference_params,
                          const T2Result& reference);

/// Seconds. Computed as reference T2 times the shape ratio, so the reference point
/// reproduces itself bit-exactly.
double evaluate(const AsymptoticModel& model, const CircuitParams& params);

struct SeriesPoint {
    double x;
    double value;
};

/// 100 |numeric - asymptotic| / numeric per point. Both series need the same ascending x grid
/// (GridMismatch otherwise). An unbounded numeric value against a finite model gives 100%;
/// two unbounded values give 0.
std::vector<SeriesPoint> percent_error(const std::vector<SeriesPoint>& numeric,
                                       const std::vector<SeriesPoint>& asymptotic);

}  // namespace transmon
