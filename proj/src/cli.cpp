#include "transmon/cli.hpp"

#include "transmon/config.hpp"
#include "transmon/error.hpp"
#include "transmon/plot.hpp"
#include "transmon/rows_io.hpp"
#include "transmon/spectral.hpp"
#include "transmon/sweep.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace transmon::cli {

namespace {

struct Overrides {
    std::string config_path;
    std::optional<double> ej_sum, ec, d, ng, flux;
    std::optional<int> ncut;
    std::optional<double> amplitude_charge, amplitude_flux, amplitude_ic;
    std::optional<std::string> policy_charge, policy_flux, policy_ic;
    std::optional<std::string> method, format, out, svg;
    bool allow_amplitude_override{false};

    std::optional<double> ratio_min, ratio_max;
    std::optional<int> points;
    std::optional<std::string> spacing;
    std::vector<std::string> channels;
    std::optional<unsigned> threads;

    bool table2{false};
};

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot read config file " + path);
    }
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
}

RunConfig resolve(const Overrides& o) {
    RunConfig config = parse_config(o.config_path.empty() ? "{}" : read_file(o.config_path));
    auto set = [](auto& slot, const auto& value) {
        if (value) slot = *value;
    };
    set(config.circuit.ej_sum, o.ej_sum);
    set(config.circuit.ec, o.ec);
    set(config.circuit.d, o.d);
    set(config.circuit.ng, o.ng);
    set(config.circuit.phi_ext, o.flux);
    set(config.trunc.ncut, o.ncut);
    set(config.channels[index_of(NoiseKind::Charge)].amplitude, o.amplitude_charge);
    set(config.channels[index_of(NoiseKind::Flux)].amplitude, o.amplitude_flux);
    set(config.channels[index_of(NoiseKind::CriticalCurrent)].amplitude, o.amplitude_ic);
    if (o.policy_charge) config.channels[0].policy = parse_policy(*o.policy_charge);
    if (o.policy_flux) config.channels[1].policy = parse_policy(*o.policy_flux);
    if (o.policy_ic) config.channels[2].policy = parse_policy(*o.policy_ic);
    if (o.method) config.method = parse_method(*o.method);
    if (o.allow_amplitude_override) config.allow_amplitude_override = true;
    if (o.format) config.output.format = parse_format(*o.format);
    set(config.output.path, o.out);
    set(config.output.svg, o.svg);
    set(config.sweep.ratio_min, o.ratio_min);
    set(config.sweep.ratio_max, o.ratio_max);
    set(config.sweep.points, o.points);
    set(config.sweep.threads, o.threads);
    if (o.spacing) config.sweep.spacing = parse_spacing(*o.spacing);
    if (!o.channels.empty()) {
        config.sweep.channels.clear();
        for (const auto& name : o.channels) {
            const NoiseKind kind = parse_noise_kind(name);
            if (std::find(config.sweep.channels.begin(), config.sweep.channels.end(), kind) ==
                config.sweep.channels.end()) {
                config.sweep.channels.push_back(kind);
            }
        }
    }
    config.validate();
    return config;
}

std::string num(double value) { return format_number(value); }

int run_spectrum(const RunConfig& config, std::ostream& out) {
    const int ncut = converge_ncut(config.circuit, config.trunc);
    const SpectrumResult s = eigen_spectrum(
        build_hamiltonian(config.circuit, {ncut, config.trunc.convergence_tol_ghz}), 3);
    out << "ej_sum_ghz  " << num(config.circuit.ej_sum) << "\n"
        << "ec_ghz      " << num(config.circuit.ec) << "\n"
        << "ratio       " << num(config.circuit.ratio()) << "\n"
        << "d           " << num(config.circuit.d) << "\n"
        << "ng          " << num(config.circuit.ng) << "\n"
        << "phi_ext     " << num(config.circuit.phi_ext) << "\n"
        << "ncut        " << ncut << "\n"
        << "e01_ghz     " << num(s.e01) << "\n"
        << "e12_ghz     " << num(s.e12) << "\n"
        << "alpha_ghz   " << num(s.anharmonicity) << "\n";
    return kSuccess;
}

void print_conventions(std::ostream& out) {
    out << "conventions: energies are E/h in GHz; T2 = 1/(2*pi*A*|dE01/dlambda|*1e9) s;\n"
        << "  charge lambda = ng (A used directly as an ng amplitude), flux lambda = Phi/Phi0,\n"
        << "  critical current lambda = common-mode fractional change of EJ_sum\n";
}

std::string result_line(const T2Result& r) {
    std::ostringstream line;
    line << std::left << std::setw(18) << to_string(r.channel.kind) << std::setw(10)
         << num(r.channel.amplitude) << std::setw(12) << to_string(r.point.policy)
         << std::setw(22) << num(r.point.ng) << std::setw(22) << num(r.point.phi_ext)
         << std::setw(24) << num(r.slope) << std::setw(24) << num(r.t2.seconds());
    return line.str();
}

void end_line(std::ostream& out, std::string line, bool clamped) {
    if (clamped) line += "clamped";
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << "\n";
}

int run_t2(const RunConfig& config, bool table2, std::ostream& out) {
    const std::string header =
        "channel           A         policy      ng                    phi_ext               "
        "slope_ghz               t2_s                    ";
    if (table2) {
        const Table2Report report = reproduce_table2(config.table2_config());
        out << "reference working point: ej_sum = " << num(config.circuit.ej_sum)
            << " GHz, ec = " << num(config.circuit.ec) << " GHz, d = " << num(config.circuit.d)
            << ", ncut = " << report.ncut_used << ", method = " << to_string(config.method)
            << "\n";
        print_conventions(out);
        end_line(out, header + "target_s    deviation_pct", false);
        for (const Table2Entry& entry : report.entries) {
            std::ostringstream extra;
            extra << std::left << std::setw(12) << num(entry.target_seconds) << std::fixed
                  << std::setprecision(2) << std::showpos << entry.deviation_percent << " ";
            end_line(out, result_line(entry.result) + extra.str(), entry.result.point.clamped);
        }
        return kSuccess;
    }
    out << "method: " << to_string(config.method) << "\n";
    print_conventions(out);
    end_line(out, header, false);
    for (NoiseKind kind : kAllNoiseKinds) {
        const auto& s = config.channels[index_of(kind)];
        const OperatingPoint point{config.circuit.ng, config.circuit.phi_ext, s.policy, false};
        const T2Result r = t2_pure(config.circuit, config.trunc, NoiseChannel{kind, s.amplitude},
                                   point, config.t2_options());
        end_line(out, result_line(r), r.point.clamped);
    }
    return kSuccess;
}

std::filesystem::path svg_path_for(const std::string& base, NoiseKind kind, bool single) {
    std::filesystem::path path(base);
    if (single) {
        return path;
    }
    const std::string ext = path.has_extension() ? path.extension().string() : ".svg";
    path.replace_filename(path.stem().string() + "_" + std::string(to_string(kind)) + ext);
    return path;
}

int run_sweep_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const std::vector<SweepRow> rows = run_sweep(config.sweep_spec());
    if (config.output.path.empty()) {
        emit_rows(rows, config.output.format, out);
    } else {
        const std::size_t bytes = emit_rows(rows, config.output.format,
                                            std::filesystem::path(config.output.path));
        err << "wrote " << rows.size() << " rows (" << bytes << " bytes) to "
            << config.output.path << "\n";
    }
    if (!config.output.svg.empty()) {
        const bool single = config.sweep.channels.size() == 1;
        for (NoiseKind kind : config.sweep.channels) {
            const auto path = svg_path_for(config.output.svg, kind, single);
            emit_plot(rows, kind, path);
            err << "wrote " << path.string() << "\n";
        }
    }
    return kSuccess;
}

int run_validate(const RunConfig& config, std::ostream& out) {
    out << "ratio: " << num(config.circuit.ratio()) << "\n" << serialize_config(config);
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Transmon spectrum and 1/f dephasing-time calculator", "transmon"};
    app.require_subcommand(1);

    Overrides o;
    app.add_option("--config", o.config_path, "JSON configuration file");
    app.add_option("--ej-sum", o.ej_sum, "EJ_sum in GHz");
    app.add_option("--ec", o.ec, "charging energy Ec in GHz");
    app.add_option("--d", o.d, "junction asymmetry, 0 <= d < 1");
    app.add_option("--ng", o.ng, "offset charge (Cooper pairs)");
    app.add_option("--flux", o.flux, "external flux in units of Phi0");
    app.add_option("--ncut", o.ncut, "charge-basis cutoff");
    app.add_option("--amplitude-charge", o.amplitude_charge, "1/f amplitude, charge (e)");
    app.add_option("--amplitude-flux", o.amplitude_flux, "1/f amplitude, flux (Phi0)");
    app.add_option("--amplitude-ic", o.amplitude_ic, "1/f amplitude, critical current (Ic)");
    app.add_option("--policy-charge", o.policy_charge, "fixed | worst_case");
    app.add_option("--policy-flux", o.policy_flux, "fixed | worst_case");
    app.add_option("--policy-ic", o.policy_ic, "fixed | worst_case");
    app.add_option("--method", o.method, "finite_difference (fd) | hellmann_feynman (hf)");
    app.add_flag("--allow-amplitude-override", o.allow_amplitude_override,
                 "accept amplitudes outside the typical 1/f ranges");
    app.add_option("--format", o.format, "csv | json");
    app.add_option("--out", o.out, "row output path (default stdout)");
    app.add_option("--svg", o.svg, "SVG plot path");

    auto* spectrum = app.add_subcommand("spectrum", "print E01, E12 and anharmonicity");
    auto* t2 = app.add_subcommand("t2", "dephasing time per noise channel");
    t2->add_flag("--table2", o.table2, "evaluate the reference working point");
    auto* sweep = app.add_subcommand("sweep", "T2 versus EJ/Ec");
    sweep->add_option("--ratio-min", o.ratio_min, "lowest EJ/Ec");
    sweep->add_option("--ratio-max", o.ratio_max, "highest EJ/Ec");
    sweep->add_option("--points", o.points, "grid size");
    sweep->add_option("--spacing", o.spacing, "linear | log");
    sweep->add_option("--channels", o.channels, "charge,flux,critical_current")->delimiter(',');
    sweep->add_option("--threads", o.threads, "worker threads, 0 = all cores");
    auto* validate = app.add_subcommand("validate", "print the resolved configuration");
    for (auto* sub : {spectrum, t2, sweep, validate}) {
        sub->fallthrough();
    }

    std::vector<std::string> argv_storage{"transmon"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kValidationFailure;
    }

    try {
        const RunConfig config = resolve(o);
        if (spectrum->parsed()) return run_spectrum(config, out);
        if (t2->parsed()) return run_t2(config, o.table2, out);
        if (sweep->parsed()) return run_sweep_command(config, out, err);
        return run_validate(config, out);
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return kValidationFailure;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kValidationFailure;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kIoFailure;
    } catch (const EmptySeries& e) {
        err << "plot error: " << e.what() << "\n";
        return kValidationFailure;
    } catch (const SolverFailure& e) {
        err << "solver failure: " << e.what() << "\n";
        return kSolverFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kSolverFailure;
    }
}

}  // namespace transmon::cli
