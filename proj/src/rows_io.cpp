#include "transmon/rows_io.hpp"

#include "transmon/error.hpp"

#include "json.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace transmon {

namespace {

using Cell = std::optional<double>;

constexpr std::array<NoiseKind, 3> kColumnOrder{NoiseKind::Charge, NoiseKind::Flux,
                                               NoiseKind::CriticalCurrent};

std::array<Cell, 13> cells(const SweepRow& row) {
    std::array<Cell, 13> out;
    out[0] = row.ratio;
    out[1] = row.ej_sum;
    out[2] = row.e01;
    out[3] = row.anharmonicity;
    for (std::size_t c = 0; c < kColumnOrder.size(); ++c) {
        const auto& columns = row.channel(kColumnOrder[c]);
        if (!columns) {
            continue;
        }
        out[4 + c] = columns->t2.seconds();
        out[7 + c] = columns->t2_asymptotic;
        out[10 + c] = columns->percent_error;
    }
    return out;
}

std::vector<std::string> header_names() {
    std::vector<std::string> names;
    std::string_view rest = kCsvHeader;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        names.emplace_back(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return names;
}

std::string render_csv(const std::vector<SweepRow>& rows) {
    std::string text(kCsvHeader);
    text += '\n';
    for (const SweepRow& row : rows) {
        const auto values = cells(row);
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (k > 0) text += ',';
            if (values[k]) text += format_number(*values[k]);
        }
        text += '\n';
    }
    return text;
}

std::string render_json(const std::vector<SweepRow>& rows) {
    const auto names = header_names();
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const SweepRow& row : rows) {
        const auto values = cells(row);
        nlohmann::ordered_json object = nlohmann::ordered_json::object();
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (!values[k]) {
                object[names[k]] = nullptr;
            } else if (std::isinf(*values[k])) {
                object[names[k]] = "inf";
            } else {
                object[names[k]] = *values[k];
            }
        }
        array.push_back(std::move(object));
    }
    return array.dump(2) + "\n";
}

}  // namespace

std::string format_number(double value) {
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    std::array<char, 64> buffer{};
    const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), end);
}

std::size_t emit_rows(const std::vector<SweepRow>& rows, RowFormat format, std::ostream& out) {
    const std::string text = format == RowFormat::Csv ? render_csv(rows) : render_json(rows);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw IoError("failed to write sweep rows");
    }
    return text.size();
}

std::size_t emit_rows(const std::vector<SweepRow>& rows, RowFormat format,
                      const std::filesystem::path& destination) {
    std::ofstream file(destination, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open " + destination.string() + " for writing");
    }
    return emit_rows(rows, format, file);
}

}  // namespace transmon
