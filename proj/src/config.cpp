#include "transmon/config.hpp"

#include "transmon/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace transmon {

using nlohmann::json;

namespace {

const std::set<std::string> kTopKeys{
    "ej_sum", "ec",     "d",                        "ng",     "phi_ext", "ncut",
    "convergence_tol_ghz", "amplitudes", "policies", "method", "allow_amplitude_override",
    "sweep",  "output"};
const std::set<std::string> kChannelKeys{"charge", "flux", "critical_current"};
const std::set<std::string> kSweepKeys{"ratio_min", "ratio_max", "points",
                                       "spacing",   "channels",  "threads"};
const std::set<std::string> kOutputKeys{"format", "path", "svg"};

void collect_unknown(const json& object, const std::set<std::string>& allowed,
                     const std::string& prefix, std::vector<std::string>& unknown) {
    for (const auto& [key, value] : object.items()) {
        if (!allowed.contains(key)) {
            unknown.push_back(prefix + key);
        }
    }
}

const json& require_object(const json& value, const std::string& field) {
    if (!value.is_object()) {
        throw ValidationError(field, "must be a JSON object");
    }
    return value;
}

double read_number(const json& value, const std::string& field) {
    if (!value.is_number()) {
        throw ValidationError(field, "must be a number");
    }
    return value.get<double>();
}

int read_int(const json& value, const std::string& field) {
    if (!value.is_number_integer()) {
        throw ValidationError(field, "must be an integer");
    }
    return value.get<int>();
}

std::string read_string(const json& value, const std::string& field) {
    if (!value.is_string()) {
        throw ValidationError(field, "must be a string");
    }
    return value.get<std::string>();
}

template <class Parse>
auto read_enum(const json& value, const std::string& field, Parse parse) {
    const std::string text = read_string(value, field);
    try {
        return parse(text);
    } catch (const ValidationError& e) {
        throw ValidationError(field, e.what());
    }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < std::min(byte, text.size()); ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

std::string_view to_string(Spacing s) { return s == Spacing::Log ? "log" : "linear"; }
std::string_view to_string(RowFormat f) { return f == RowFormat::Csv ? "csv" : "json"; }

}  // namespace

NoiseKind parse_noise_kind(std::string_view name) {
    if (name == "charge") return NoiseKind::Charge;
    if (name == "flux") return NoiseKind::Flux;
    if (name == "critical_current" || name == "ic") return NoiseKind::CriticalCurrent;
    throw ValidationError("channel", "unknown channel '" + std::string(name) + "'");
}

Policy parse_policy(std::string_view name) {
    if (name == "fixed") return Policy::Fixed;
    if (name == "worst_case") return Policy::WorstCase;
    throw ValidationError("policy", "must be 'fixed' or 'worst_case'");
}

SlopeMethod parse_method(std::string_view name) {
    if (name == "finite_difference" || name == "fd") return SlopeMethod::FiniteDifference;
    if (name == "hellmann_feynman" || name == "hf") return SlopeMethod::HellmannFeynman;
    throw ValidationError("method", "must be 'finite_difference' or 'hellmann_feynman'");
}

Spacing parse_spacing(std::string_view name) {
    if (name == "linear") return Spacing::Linear;
    if (name == "log") return Spacing::Log;
    throw ValidationError("spacing", "must be 'linear' or 'log'");
}

RowFormat parse_format(std::string_view name) {
    if (name == "csv") return RowFormat::Csv;
    if (name == "json") return RowFormat::Json;
    throw ValidationError("format", "must be 'csv' or 'json'");
}

void RunConfig::validate() const {
    circuit.validate();
    trunc.validate();
    for (NoiseKind kind : kAllNoiseKinds) {
        const double a = channels[index_of(kind)].amplitude;
        const std::string field = "amplitudes." + std::string(to_string(kind));
        if (!std::isfinite(a)) {
            throw NonFiniteParameter(field);
        }
        if (!(a > 0.0)) {
            throw ValidationError(field, "must be > 0");
        }
        const auto [lo, hi] = amplitude_range(kind);
        if (!allow_amplitude_override && (a < lo || a > hi)) {
            throw ValidationError(field, "must lie in [" + std::to_string(lo) + ", " +
                                             std::to_string(hi) +
                                             "] unless allow_amplitude_override is set");
        }
    }
    sweep_spec().validate();
}

T2Options RunConfig::t2_options() const {
    T2Options options;
    options.method = method;
    options.allow_amplitude_outside_range = allow_amplitude_override;
    return options;
}

SweepSpec RunConfig::sweep_spec() const {
    SweepSpec spec;
    spec.ec = circuit.ec;
    spec.ratio_min = sweep.ratio_min;
    spec.ratio_max = sweep.ratio_max;
    spec.points = sweep.points;
    spec.spacing = sweep.spacing;
    spec.d = circuit.d;
    spec.ng = circuit.ng;
    spec.phi_ext = circuit.phi_ext;
    spec.channels = sweep.channels;
    spec.settings = channels;
    spec.trunc = trunc;
    spec.t2_options = t2_options();
    spec.threads = sweep.threads;
    return spec;
}

Table2Config RunConfig::table2_config() const {
    Table2Config table;
    table.params = circuit;
    table.trunc = trunc;
    table.settings = channels;
    table.t2_options = t2_options();
    return table;
}

RunConfig parse_config(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(line, column, e.what());
    }
    require_object(root, "config");

    std::vector<std::string> unknown;
    collect_unknown(root, kTopKeys, "", unknown);
    for (const char* section : {"amplitudes", "policies"}) {
        if (root.contains(section)) {
            collect_unknown(require_object(root[section], section), kChannelKeys,
                            std::string(section) + ".", unknown);
        }
    }
    if (root.contains("sweep")) {
        collect_unknown(require_object(root["sweep"], "sweep"), kSweepKeys, "sweep.", unknown);
    }
    if (root.contains("output")) {
        collect_unknown(require_object(root["output"], "output"), kOutputKeys, "output.", unknown);
    }
    if (!unknown.empty()) {
        std::string list;
        for (const auto& key : unknown) {
            list += (list.empty() ? "" : ", ") + key;
        }
        throw ValidationError("config", "unknown keys: " + list);
    }

    RunConfig config;
    auto number = [&](const json& obj, const char* key, double& slot, const std::string& field) {
        if (obj.contains(key)) slot = read_number(obj[key], field);
    };
    number(root, "ej_sum", config.circuit.ej_sum, "ej_sum");
    number(root, "ec", config.circuit.ec, "ec");
    number(root, "d", config.circuit.d, "d");
    number(root, "ng", config.circuit.ng, "ng");
    number(root, "phi_ext", config.circuit.phi_ext, "phi_ext");
    number(root, "convergence_tol_ghz", config.trunc.convergence_tol_ghz, "convergence_tol_ghz");
    if (root.contains("ncut")) config.trunc.ncut = read_int(root["ncut"], "ncut");
    if (root.contains("method")) config.method = read_enum(root["method"], "method", parse_method);
    if (root.contains("allow_amplitude_override")) {
        if (!root["allow_amplitude_override"].is_boolean()) {
            throw ValidationError("allow_amplitude_override", "must be a boolean");
        }
        config.allow_amplitude_override = root["allow_amplitude_override"].get<bool>();
    }
    for (NoiseKind kind : kAllNoiseKinds) {
        const std::string key(to_string(kind));
        auto& settings = config.channels[index_of(kind)];
        if (root.contains("amplitudes")) {
            number(root["amplitudes"], key.c_str(), settings.amplitude, "amplitudes." + key);
        }
        if (root.contains("policies") && root["policies"].contains(key)) {
            settings.policy = read_enum(root["policies"][key], "policies." + key, parse_policy);
        }
    }
    if (root.contains("sweep")) {
        const json& s = root["sweep"];
        number(s, "ratio_min", config.sweep.ratio_min, "sweep.ratio_min");
        number(s, "ratio_max", config.sweep.ratio_max, "sweep.ratio_max");
        if (s.contains("points")) config.sweep.points = read_int(s["points"], "sweep.points");
        if (s.contains("spacing")) {
            config.sweep.spacing = read_enum(s["spacing"], "sweep.spacing", parse_spacing);
        }
        if (s.contains("threads")) {
            const int threads = read_int(s["threads"], "sweep.threads");
            if (threads < 0) throw ValidationError("sweep.threads", "must be >= 0");
            config.sweep.threads = static_cast<unsigned>(threads);
        }
        if (s.contains("channels")) {
            if (!s["channels"].is_array()) {
                throw ValidationError("sweep.channels", "must be an array of channel names");
            }
            config.sweep.channels.clear();
            for (const auto& entry : s["channels"]) {
                const NoiseKind kind = read_enum(entry, "sweep.channels", parse_noise_kind);
                if (std::find(config.sweep.channels.begin(), config.sweep.channels.end(), kind) ==
                    config.sweep.channels.end()) {
                    config.sweep.channels.push_back(kind);
                }
            }
        }
    }
    if (root.contains("output")) {
        const json& o = root["output"];
        if (o.contains("format")) {
            config.output.format = read_enum(o["format"], "output.format", parse_format);
        }
        if (o.contains("path")) config.output.path = read_string(o["path"], "output.path");
        if (o.contains("svg")) config.output.svg = read_string(o["svg"], "output.svg");
    }
    config.validate();
    return config;
}

std::string serialize_config(const RunConfig& config) {
    json root;
    root["ej_sum"] = config.circuit.ej_sum;
    root["ec"] = config.circuit.ec;
    root["d"] = config.circuit.d;
    root["ng"] = config.circuit.ng;
    root["phi_ext"] = config.circuit.phi_ext;
    root["ncut"] = config.trunc.ncut;
    root["convergence_tol_ghz"] = config.trunc.convergence_tol_ghz;
    for (NoiseKind kind : kAllNoiseKinds) {
        const std::string key(to_string(kind));
        root["amplitudes"][key] = config.channels[index_of(kind)].amplitude;
        root["policies"][key] = std::string(to_string(config.channels[index_of(kind)].policy));
    }
    root["method"] = std::string(to_string(config.method));
    root["allow_amplitude_override"] = config.allow_amplitude_override;
    json& sweep = root["sweep"];
    sweep["ratio_min"] = config.sweep.ratio_min;
    sweep["ratio_max"] = config.sweep.ratio_max;
    sweep["points"] = config.sweep.points;
    sweep["spacing"] = std::string(to_string(config.sweep.spacing));
    sweep["threads"] = config.sweep.threads;
    sweep["channels"] = json::array();
    for (NoiseKind kind : config.sweep.channels) {
        sweep["channels"].push_back(std::string(to_string(kind)));
    }
    root["output"]["format"] = std::string(to_string(config.output.format));
    root["output"]["path"] = config.output.path;
    root["output"]["svg"] = config.output.svg;
    return root.dump(2) + "\n";
}

}  // namespace transmon
