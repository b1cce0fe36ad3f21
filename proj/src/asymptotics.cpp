#include "transmon/asymptotics.hpp"

#include "transmon/error.hpp"

#include <cmath>

namespace transmon {

AsymptoticKind asymptotic_kind_for(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::Charge: return AsymptoticKind::ChargeExp;
        case NoiseKind::Flux: return AsymptoticKind::FluxInvSqrt;
        case NoiseKind::CriticalCurrent: return AsymptoticKind::IcInvSqrt;
    }
    return AsymptoticKind::ChargeExp;
}

double shape(AsymptoticKind kind, const CircuitParams& params) {
    switch (kind) {
        case AsymptoticKind::ChargeExp: return std::exp(std::sqrt(params.ej_sum / params.ec));
        case AsymptoticKind::FluxInvSqrt: return 1.0 / std::sqrt(2.0 * params.ec * params.ej_sum);
        case AsymptoticKind::IcInvSqrt: return 1.0 / std::sqrt(params.ej_sum);
    }
    return 0.0;
}

namespace {

// shape(params) / shape(reference), exactly 1 when params == reference.
double shape_ratio(AsymptoticKind kind, const CircuitParams& params, const CircuitParams& ref) {
    switch (kind) {
        case AsymptoticKind::ChargeExp:
            return std::exp(std::sqrt(params.ej_sum / params.ec) - std::sqrt(ref.ej_sum / ref.ec));
        case AsymptoticKind::FluxInvSqrt:
            return std::sqrt((ref.ec * ref.ej_sum) / (params.ec * params.ej_sum));
        case AsymptoticKind::IcInvSqrt: return std::sqrt(ref.ej_sum / params.ej_sum);
    }
    return 0.0;
}

}  // namespace

AsymptoticModel calibrate(AsymptoticKind kind, const CircuitParams& reference_params,
                          const T2Result& reference) {
    reference_params.validate();
    if (!reference.t2.is_bounded()) {
        throw UnboundedReference("asymptotic model needs a bounded reference T2");
    }
    if (!(reference_params.ej_sum > 0.0)) {
        throw ValidationError("ej_sum", "calibration needs ej_sum > 0");
    }
    const double prefactor = reference.t2.seconds() / shape(kind, reference_params);
    if (!std::isfinite(prefactor) || !(prefactor > 0.0)) {
        throw SolverFailure("asymptotic prefactor is not a positive finite number");
    }
    return {kind, prefactor, reference_params, reference};
}

double evaluate(const AsymptoticModel& model, const CircuitParams& params) {
    params.validate();
    return model.reference.t2.seconds() * shape_ratio(model.kind, params, model.reference_params);
}

std::vector<SeriesPoint> percent_error(const std::vector<SeriesPoint>& numeric,
                                       const std::vector<SeriesPoint>& asymptotic) {
    if (numeric.size() != asymptotic.size()) {
        throw GridMismatch("series lengths differ");
    }
    std::vector<SeriesPoint> out;
    out.reserve(numeric.size());
    for (std::size_t k = 0; k < numeric.size(); ++k) {
        if (numeric[k].x != asymptotic[k].x) {
            throw GridMismatch("x grids differ at index " + std::to_string(k));
        }
        if (k > 0 && !(numeric[k].x > numeric[k - 1].x)) {
            throw GridMismatch("x grid is not strictly ascending at index " + std::to_string(k));
        }
        const double num = numeric[k].value;
        const double asym = asymptotic[k].value;
        double percent = 0.0;
        if (std::isinf(num)) {
            percent = std::isinf(asym) ? 0.0 : 100.0;
        } else {
            percent = 100.0 * std::abs(num - asym) / num;
        }
        out.push_back({numeric[k].x, percent});
    }
    return out;
}

}  // namespace transmon
