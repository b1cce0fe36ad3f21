// rows_io.hpp — CSV/JSON serialization of sweep rows.

#pragma once

#include "transmon/config.hpp"
#include "transmon/sweep.hpp"

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace transmon {

inline constexpr std::string_view kCsvHeader =
    "ratio,ej_sum_ghz,e01_ghz,alpha_ghz,t2_charge_s,t2_flux_s,t2_ic_s,t2_charge_asym_s,"
    "t2_flux_asym_s,t2_ic_asym_s,err_charge_pct,err_flux_pct,err_ic_pct";

/// Shortest decimal that round-trips; "inf" for +infinity.
std::string format_number(double value);

/// Returns the number of bytes written. Throws IoError if the stream fails.
std::size_t emit_rows(const std::vector<SweepRow>& rows, RowFormat format, std::ostream& out);

std::size_t emit_rows(const std::vector<SweepRow>& rows, RowFormat format,
                      const std::filesystem::path& destination);

}  // namespace transmon
