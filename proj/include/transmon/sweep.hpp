// sweep.hpp — T2 per noise channel across an EJΣ/Ec grid, plus the Table 2 working point.

#pragma once

#include "transmon/asymptotics.hpp"
#include "transmon/circuit_model.hpp"
#include "transmon/error.hpp"
#include "transmon/noise.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace transmon {

/// Per-channel settings, indexed by static_cast<size_t>(NoiseKind).
struct ChannelSettings {
    double amplitude;
    Policy policy;
};

using ChannelTable = std::array<ChannelSettings, 3>;

/// Charge and flux worst case, critical current fixed; amplitudes 1e-4, 1e-5, 1e-6.
ChannelTable default_channel_settings();

inline std::size_t index_of(NoiseKind kind) { return static_cast<std::size_t>(kind); }

enum class Spacing { Linear, Log };

/// EJΣ/Ec at which overlays are calibrated (20 GHz / 0.35 GHz).
inline constexpr double kWorkingRatio = 20.0 / 0.35;

struct SweepSpec {
    double ec{0.35};
    double ratio_min{10.0};
    double ratio_max{150.0};
    int points{81};
    Spacing spacing{Spacing::Log};
    double d{0.1};
    double ng{0.5};       // bias for e01/α and for fixed-policy channels
    double phi_ext{0.0};  // same
    std::vector<NoiseKind> channels{kAllNoiseKinds.begin(), kAllNoiseKinds.end()};
    ChannelTable settings{default_channel_settings()};
    TruncationConfig trunc{};
    T2Options t2_options{};
    unsigned threads{1};  // 0 = hardware concurrency

    void validate() const;
    std::vector<double> ratios() const;
};

struct ChannelColumns {
    double slope{0.0};
    Lifetime t2{Lifetime::unbounded()};
    OperatingPoint point;
    std::optional<double> t2_asymptotic;  // empty when no model could be calibrated
    std::optional<double> percent_error;
};

struct SweepRow {
    double ratio{0.0};
    double ej_sum{0.0};
    double e01{0.0};
    double anharmonicity{0.0};
    std::array<std::optional<ChannelColumns>, 3> channels;

    const std::optional<ChannelColumns>& channel(NoiseKind kind) const {
        return channels[index_of(kind)];
    }
};

/// A row failed; carries the ratio it was computing.
class SweepRowFailure : public SolverFailure {
public:
    SweepRowFailure(double ratio, const std::string& cause)
        : SolverFailure("sweep row at EJ/Ec = " + std::to_string(ratio) + " failed: " + cause),
          ratio_(ratio) {}

    double ratio() const noexcept { return ratio_; }

private:
    double ratio_;
};

/// Rows in ascending ratio. Rows are computed independently (possibly on several threads)
/// and merged in grid order, so the output does not depend on the thread count.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Index of the row the overlays are calibrated on.
std::size_t calibration_row(const std::vector<double>& ratios);

struct Table2Config {
    CircuitParams params{};  // ej 20, ec 0.35, d 0.1, bias ng 0.5, φ 0
    TruncationConfig trunc{};
    ChannelTable settings{default_channel_settings()};
    T2Options t2_options{};
};

struct Table2Entry {
    T2Result result;
    double target_seconds;
    double deviation_percent;  // signed, 100 (computed - target) / target
};

struct Table2Report {
    Table2Config config;
    int ncut_used{0};
    std::array<Table2Entry, 3> entries;  // charge, flux, critical current
};

/// Reference values: 8.667 s, 1.311 µs, 32.104 µs.
inline constexpr std::array<double, 3> kTable2Targets{8.667, 1.311e-6, 32.104e-6};

Table2Report reproduce_table2(const Table2Config& config = {});

}  // namespace transmon
