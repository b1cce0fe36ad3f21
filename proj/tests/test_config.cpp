#include <catch_amalgamated.hpp>

#include "transmon/config.hpp"
#include "transmon/error.hpp"

#include <fstream>
#include <sstream>

using namespace transmon;
using Catch::Matchers::ContainsSubstring;

namespace {

std::string read_data(const std::string& name) {
    std::ifstream file(std::string(TRANSMON_TEST_DATA_DIR) + "/" + name);
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
}

}  // namespace

TEST_CASE("empty object gives the working-point defaults", "[config]") {
    const RunConfig c = parse_config("{}");
    CHECK(c.circuit.ej_sum == 20.0);
    CHECK(c.circuit.ec == 0.35);
    CHECK(c.circuit.d == 0.1);
    CHECK(c.circuit.ratio() == Catch::Approx(57.142857142857146).epsilon(1e-15));
    CHECK(c.trunc.ncut == 30);
    CHECK(c.method == SlopeMethod::FiniteDifference);
    CHECK(c.channels[index_of(NoiseKind::Charge)].amplitude == 1e-4);
    CHECK(c.channels[index_of(NoiseKind::Flux)].amplitude == 1e-5);
    CHECK(c.channels[index_of(NoiseKind::CriticalCurrent)].amplitude == 1e-6);
    CHECK(c.channels[index_of(NoiseKind::CriticalCurrent)].policy == Policy::Fixed);
    CHECK(c.sweep.points == 81);
    CHECK(c.sweep.channels.size() == 3);
    CHECK(c.output.format == RowFormat::Csv);
}

TEST_CASE("data file parses", "[config]") {
    const RunConfig c = parse_config(read_data("working_point.json"));
    CHECK(c.sweep.points == 5);
    CHECK(c.sweep.ratio_min == 20.0);
    const SweepSpec spec = c.sweep_spec();
    CHECK(spec.ec == 0.35);
    CHECK(spec.ratios().size() == 5);
}

TEST_CASE("bounds are enforced with the field name", "[config][errors]") {
    try {
        parse_config(R"({"d": 1.5})");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field() == "d");
    }
    CHECK_THROWS_AS(parse_config(R"({"ec": 0})"), ValidationError);
    CHECK_THROWS_AS(parse_config(R"({"ej_sum": -1})"), ValidationError);
    CHECK_THROWS_AS(parse_config(R"({"ncut": 1})"), ValidationError);
    CHECK_THROWS_AS(parse_config(R"({"amplitudes": {"flux": 1e-2}})"), ValidationError);
    CHECK_NOTHROW(
        parse_config(R"({"amplitudes": {"flux": 1e-2}, "allow_amplitude_override": true})"));
    CHECK_THROWS_AS(parse_config(R"({"sweep": {"ratio_min": 50, "ratio_max": 20}})"),
                    ValidationError);
}

TEST_CASE("unknown keys are all reported", "[config][errors]") {
    try {
        parse_config(R"({"ej_sum": 20, "bogus": 1, "sweep": {"pionts": 3}, "zz": 0})");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        const std::string what = e.what();
        CHECK_THAT(what, ContainsSubstring("bogus"));
        CHECK_THAT(what, ContainsSubstring("sweep.pionts"));
        CHECK_THAT(what, ContainsSubstring("zz"));
    }
}

TEST_CASE("malformed JSON reports line and column", "[config][errors]") {
    try {
        parse_config("{\n  \"ec\": 0.35,\n  \"d\": ,\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() >= 7);
    }
    CHECK_THROWS_AS(parse_config(""), ParseError);
}

TEST_CASE("wrong types name the field", "[config][errors]") {
    try {
        parse_config(R"({"ec": "big"})");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field() == "ec");
    }
    CHECK_THROWS_AS(parse_config(R"({"method": "magic"})"), ValidationError);
    CHECK_THROWS_AS(parse_config(R"({"sweep": {"channels": ["charge", "heat"]}})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_config(R"({"output": {"format": "xml"}})"), ValidationError);
}

TEST_CASE("serialize round-trips", "[config][property]") {
    RunConfig c = parse_config(R"({"ej_sum": 13.7, "ec": 0.21, "d": 0.33, "ng": 0.12,
        "phi_ext": 0.2, "method": "hf", "sweep": {"points": 7, "spacing": "linear",
        "channels": ["flux", "ic"], "threads": 2}, "output": {"format": "json",
        "path": "rows.json", "svg": "t2.svg"}})");
    const std::string text = serialize_config(c);
    const RunConfig back = parse_config(text);
    CHECK(serialize_config(back) == text);
    CHECK(back.circuit.ej_sum == 13.7);
    CHECK(back.method == SlopeMethod::HellmannFeynman);
    CHECK(back.sweep.spacing == Spacing::Linear);
    CHECK(back.sweep.channels ==
          std::vector<NoiseKind>{NoiseKind::Flux, NoiseKind::CriticalCurrent});
    CHECK(back.output.svg == "t2.svg");
    CHECK(text.back() == '\n');
}

TEST_CASE("name parsers", "[config]") {
    CHECK(parse_noise_kind("critical_current") == NoiseKind::CriticalCurrent);
    CHECK(parse_noise_kind("ic") == NoiseKind::CriticalCurrent);
    CHECK(parse_policy("worst_case") == Policy::WorstCase);
    CHECK(parse_method("fd") == SlopeMethod::FiniteDifference);
    CHECK(parse_spacing("log") == Spacing::Log);
    CHECK(parse_format("json") == RowFormat::Json);
    CHECK_THROWS_AS(parse_policy("sometimes"), ValidationError);
}
