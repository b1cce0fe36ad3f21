// config.hpp — JSON run configuration with defaults and unknown-key rejection.
//
// Recognized keys (all optional):
//   ej_sum, ec, d, ng, phi_ext, ncut, convergence_tol_ghz,
//   amplitudes.{charge,flux,critical_current}, policies.{charge,flux,critical_current}
//   ("fixed" | "worst_case"), method ("finite_difference" | "hellmann_feynman"),
//   allow_amplitude_override,
//   sweep.{ratio_min,ratio_max,points,spacing ("linear"|"log"),channels,threads},
//   output.{format ("csv"|"json"),path,svg}

#pragma once

#include "transmon/circuit_model.hpp"
#include "transmon/noise.hpp"
#include "transmon/sweep.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace transmon {

enum class RowFormat { Csv, Json };

struct SweepSettings {
    double ratio_min{10.0};
    double ratio_max{150.0};
    int points{81};
    Spacing spacing{Spacing::Log};
    std::vector<NoiseKind> channels{kAllNoiseKinds.begin(), kAllNoiseKinds.end()};
    unsigned threads{0};
};

struct OutputSettings {
    RowFormat format{RowFormat::Csv};
    std::string path;  // empty = stdout
    std::string svg;   // empty = no plot
};

struct RunConfig {
    CircuitParams circuit{};
    TruncationConfig trunc{};
    ChannelTable channels{default_channel_settings()};
    SlopeMethod method{SlopeMethod::FiniteDifference};
    bool allow_amplitude_override{false};
    SweepSettings sweep{};
    OutputSettings output{};

    /// Throws ValidationError naming the offending field.
    void validate() const;

    SweepSpec sweep_spec() const;
    Table2Config table2_config() const;
    T2Options t2_options() const;
};

/// Parses and validates. ParseError carries line/column; ValidationError lists every
/// unknown key or names the violated bound.
RunConfig parse_config(std::string_view text);

/// Fully resolved config as pretty JSON; parse_config(serialize_config(c)) reproduces c.
std::string serialize_config(const RunConfig& config);

NoiseKind parse_noise_kind(std::string_view name);
Policy parse_policy(std::string_view name);
SlopeMethod parse_method(std::string_view name);
Spacing parse_spacing(std::string_view name);
RowFormat parse_format(std::string_view name);

}  // namespace transmon
