// plot.hpp — standalone SVG of T2 versus EJ/Ec for one channel (log-scaled T2 axis).

#pragma once

#include "transmon/noise.hpp"
#include "transmon/sweep.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace transmon {

/// Numeric curve as a solid polyline, the calibrated overlay (when present) as a dashed one.
/// Throws EmptySeries when the rows hold no bounded T2 for the channel.
std::string render_plot(const std::vector<SweepRow>& rows, NoiseKind kind);

void emit_plot(const std::vector<SweepRow>& rows, NoiseKind kind,
               const std::filesystem::path& destination);

}  // namespace transmon
