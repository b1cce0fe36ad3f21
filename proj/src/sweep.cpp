#include "transmon/sweep.hpp"

#include "transmon/spectral.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace transmon {

ChannelTable default_channel_settings() {
    return {{
        {1e-4, Policy::WorstCase},
        {1e-5, Policy::WorstCase},
        {1e-6, Policy::Fixed},
    }};
}

void SweepSpec::validate() const {
    CircuitParams probe{ratio_min * ec, ec, d, ng, phi_ext};
    probe.validate();
    trunc.validate();
    if (!std::isfinite(ratio_min) || !(ratio_min > 0.0)) {
        throw ValidationError("sweep.ratio_min", "must satisfy ratio_min > 0");
    }
    if (!std::isfinite(ratio_max) || !(ratio_max > ratio_min)) {
        throw ValidationError("sweep.ratio_max", "must satisfy ratio_max > ratio_min");
    }
    if (points < 2) {
        throw ValidationError("sweep.points", "must satisfy points >= 2");
    }
    if (channels.empty()) {
        throw ValidationError("sweep.channels", "must name at least one channel");
    }
    for (NoiseKind kind : channels) {
        const auto& s = settings[index_of(kind)];
        const auto [lo, hi] = amplitude_range(kind);
        const std::string field = "amplitudes." + std::string(to_string(kind));
        if (!std::isfinite(s.amplitude) || !(s.amplitude > 0.0)) {
            throw ValidationError(field, "must be > 0");
        }
        if (!t2_options.allow_amplitude_outside_range && (s.amplitude < lo || s.amplitude > hi)) {
            throw ValidationError(field, "outside the typical 1/f range");
        }
    }
}

std::vector<double> SweepSpec::ratios() const {
    std::vector<double> out(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) {
        const double t = static_cast<double>(k) / (points - 1);
        if (spacing == Spacing::Linear) {
            out[static_cast<std::size_t>(k)] = ratio_min + t * (ratio_max - ratio_min);
        } else {
            out[static_cast<std::size_t>(k)] =
                std::exp(std::log(ratio_min) + t * (std::log(ratio_max) - std::log(ratio_min)));
        }
    }
    out.front() = ratio_min;
    out.back() = ratio_max;
    return out;
}

std::size_t calibration_row(const std::vector<double>& ratios) {
    const double target = (kWorkingRatio >= ratios.front() && kWorkingRatio <= ratios.back())
                              ? kWorkingRatio
                              : 0.5 * (ratios.front() + ratios.back());
    std::size_t best = 0;
    for (std::size_t k = 1; k < ratios.size(); ++k) {
        if (std::abs(ratios[k] - target) < std::abs(ratios[best] - target)) {
            best = k;
        }
    }
    return best;
}

namespace {

CircuitParams row_params(const SweepSpec& spec, double ratio) {
    return {ratio * spec.ec, spec.ec, spec.d, spec.ng, spec.phi_ext};
}

SweepRow compute_row(const SweepSpec& spec, double ratio) {
    const CircuitParams params = row_params(spec, ratio);
    SweepRow row;
    row.ratio = ratio;
    row.ej_sum = params.ej_sum;

    const TruncationConfig converged{converge_ncut(params, spec.trunc),
                                     spec.trunc.convergence_tol_ghz};
    const SpectrumResult spectrum = eigen_spectrum(build_hamiltonian(params, converged), 3);
    row.e01 = spectrum.e01;
    row.anharmonicity = spectrum.anharmonicity;

    for (NoiseKind kind : spec.channels) {
        const auto& s = spec.settings[index_of(kind)];
        const OperatingPoint point{params.ng, params.phi_ext, s.policy, false};
        const T2Result result =
            t2_pure(params, spec.trunc, NoiseChannel{kind, s.amplitude}, point, spec.t2_options);
        ChannelColumns columns;
        columns.slope = result.slope;
        columns.t2 = result.t2;
        columns.point = result.point;
        row.channels[index_of(kind)] = columns;
    }
    return row;
}

std::vector<SweepRow> compute_rows(const SweepSpec& spec, const std::vector<double>& ratios) {
    std::vector<std::optional<SweepRow>> slots(ratios.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> cancelled{false};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    std::size_t failure_index = ratios.size();

    auto worker = [&] {
        while (!cancelled.load()) {
            const std::size_t k = next.fetch_add(1);
            if (k >= ratios.size()) {
                return;
            }
            try {
                slots[k] = compute_row(spec, ratios[k]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                // Report the lowest failing ratio regardless of scheduling.
                if (k < failure_index) {
                    failure_index = k;
                    failure = std::current_exception();
                }
                cancelled.store(true);
            }
        }
    };

    unsigned threads = spec.threads == 0 ? std::thread::hardware_concurrency() : spec.threads;
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(ratios.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }

    if (failure) {
        try {
            std::rethrow_exception(failure);
        } catch (const std::exception& e) {
            throw SweepRowFailure(ratios[failure_index], e.what());
        }
    }
    std::vector<SweepRow> rows;
    rows.reserve(slots.size());
    for (auto& slot : slots) {
        rows.push_back(std::move(*slot));
    }
    return rows;
}

void attach_overlays(const SweepSpec& spec, std::vector<SweepRow>& rows,
                     const std::vector<double>& ratios) {
    const std::size_t ref = calibration_row(ratios);
    const CircuitParams ref_params = row_params(spec, ratios[ref]);
    for (NoiseKind kind : spec.channels) {
        const auto& ref_columns = rows[ref].channel(kind);
        if (!ref_columns || !ref_columns->t2.is_bounded()) {
            continue;  // sweet-spot reference: no model, overlay columns stay empty
        }
        const auto& s = spec.settings[index_of(kind)];
        T2Result reference;
        reference.channel = {kind, s.amplitude};
        reference.slope = ref_columns->slope;
        reference.t2 = ref_columns->t2;
        reference.point = ref_columns->point;
        reference.method = spec.t2_options.method;
        const AsymptoticModel model = calibrate(asymptotic_kind_for(kind), ref_params, reference);

        std::vector<SeriesPoint> numeric;
        std::vector<SeriesPoint> overlay;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const double asym = evaluate(model, row_params(spec, ratios[k]));
            numeric.push_back({ratios[k], rows[k].channel(kind)->t2.seconds()});
            overlay.push_back({ratios[k], asym});
        }
        const auto errors = percent_error(numeric, overlay);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            auto& columns = *rows[k].channels[index_of(kind)];
            columns.t2_asymptotic = overlay[k].value;
            columns.percent_error = errors[k].value;
        }
    }
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    const std::vector<double> ratios = spec.ratios();
    std::vector<SweepRow> rows = compute_rows(spec, ratios);
    attach_overlays(spec, rows, ratios);
    return rows;
}

Table2Report reproduce_table2(const Table2Config& config) {
    config.params.validate();
    config.trunc.validate();

    Table2Report report;
    report.config = config;
    report.ncut_used = converge_ncut(config.params, config.trunc);
    for (NoiseKind kind : kAllNoiseKinds) {
        const auto& s = config.settings[index_of(kind)];
        const OperatingPoint point{config.params.ng, config.params.phi_ext, s.policy, false};
        Table2Entry entry{
            t2_pure(config.params, config.trunc, NoiseChannel{kind, s.amplitude}, point,
                    config.t2_options),
            kTable2Targets[index_of(kind)], 0.0};
        entry.deviation_percent =
            100.0 * (entry.result.t2.seconds() - entry.target_seconds) / entry.target_seconds;
        report.entries[index_of(kind)] = entry;
    }
    return report;
}

}  // namespace transmon
