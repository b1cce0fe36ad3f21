#include <catch_amalgamated.hpp>

#include "transmon/error.hpp"
#include "transmon/noise.hpp"
#include "transmon/spectral.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace transmon;
using Catch::Approx;

namespace {

// Frozen from tests/oracle/transmon_oracle.py (dense numpy Hellmann–Feynman).
constexpr double kOracleIcSlope = 3.7525808850011924;       // ej 20, ec .35, d 0, ng .5
constexpr double kOracleChargeSlope = 1.3101943762137322e-05;  // ng .25, d .1
constexpr double kOracleFluxSlope = 12.178684461618232;      // phi .3, ng .5, d .1
constexpr double kOracleWorstFluxPhi = 0.4625;               // 1e-4 grid
constexpr double kOracleWorstFluxSlope = 25.62745938797951;

const CircuitParams kWorking{20.0, 0.35, 0.1, 0.5, 0.0};

OperatingPoint fixed(double ng, double phi) { return {ng, phi, Policy::Fixed, false}; }

}  // namespace

TEST_CASE("sweet spots have zero slope", "[noise][sweet-spot]") {
    for (double ng : {0.0, 0.5}) {
        CHECK(slope_fd(kWorking, {}, NoiseKind::Charge, fixed(ng, 0.0)) < 1e-12 * 4.0 * 0.35);
        CHECK(slope_hf(kWorking, {}, NoiseKind::Charge, fixed(ng, 0.0)) < 1e-12);
    }
    for (double d : {0.0, 0.1, 0.2}) {
        const CircuitParams p{20.0, 0.35, d, 0.5, 0.0};
        CHECK(slope_fd(p, {}, NoiseKind::Flux, fixed(0.5, 0.0)) < 1e-9);
        CHECK(slope_hf(p, {}, NoiseKind::Flux, fixed(0.5, 0.0)) < 1e-9);
    }
    for (double d : {0.05, 0.1, 0.2}) {
        const CircuitParams p{20.0, 0.35, d, 0.5, 0.5};
        CHECK(slope_fd(p, {}, NoiseKind::Flux, fixed(0.5, 0.5)) < 1e-6);
        CHECK(slope_hf(p, {}, NoiseKind::Flux, fixed(0.5, 0.5)) < 1e-6);
    }
}

TEST_CASE("critical-current slope", "[noise]") {
    const CircuitParams p{20.0, 0.35, 0.0, 0.5, 0.0};
    const double fd = slope_fd(p, {}, NoiseKind::CriticalCurrent, fixed(0.5, 0.0));
    const double e01 = transition_energy(p, {}, 0, 1);
    CHECK(std::abs(fd - e01 / 2.0) / (e01 / 2.0) < 0.10);
    CHECK(std::abs(fd - 3.57) / 3.57 < 0.10);
    CHECK(fd == Approx(kOracleIcSlope).epsilon(1e-8));
    CHECK(slope_hf(p, {}, NoiseKind::CriticalCurrent, fixed(0.5, 0.0)) ==
          Approx(kOracleIcSlope).epsilon(1e-10));
}

TEST_CASE("slopes match the dense oracle", "[noise]") {
    CHECK(slope_fd(kWorking, {}, NoiseKind::Charge, fixed(0.25, 0.0)) ==
          Approx(kOracleChargeSlope).epsilon(1e-6));
    CHECK(slope_hf(kWorking, {}, NoiseKind::Charge, fixed(0.25, 0.0)) ==
          Approx(kOracleChargeSlope).epsilon(1e-6));
    CHECK(slope_fd(kWorking, {}, NoiseKind::Flux, fixed(0.5, 0.3)) ==
          Approx(kOracleFluxSlope).epsilon(1e-9));
    CHECK(slope_hf(kWorking, {}, NoiseKind::Flux, fixed(0.5, 0.3)) ==
          Approx(kOracleFluxSlope).epsilon(1e-10));
}

TEST_CASE("charge slope in the EJ = 0 limit", "[noise]") {
    const CircuitParams p{0.0, 0.35, 0.0, 0.25, 0.0};
    CHECK(slope_fd(p, {}, NoiseKind::Charge, fixed(0.25, 0.0)) == Approx(2.8).epsilon(1e-10));
    CHECK(slope_hf(p, {}, NoiseKind::Charge, fixed(0.25, 0.0)) == Approx(2.8).epsilon(1e-12));
}

TEST_CASE("FD and Hellmann-Feynman agree on random draws", "[noise][property]") {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int draw = 0; draw < 30; ++draw) {
        const double ratio = 5.0 + 145.0 * u(rng);
        const CircuitParams p{ratio * 0.35, 0.35, 0.2 * u(rng), u(rng), u(rng)};
        for (NoiseKind kind : kAllNoiseKinds) {
            const OperatingPoint point = OperatingPoint::fixed_at(p);
            const double fd = slope_fd(p, {}, kind, point);
            const double hf = slope_hf(p, {}, kind, point);
            INFO("ratio " << ratio << " d " << p.d << " ng " << p.ng << " phi " << p.phi_ext
                          << " channel " << to_string(kind));
            CHECK(std::abs(fd - hf) <= std::max(1e-3 * hf, 1e-9));
        }
    }
}

TEST_CASE("worst-case operating points", "[noise][worst-case]") {
    SECTION("flux with asymmetry peaks just below half flux") {
        const OperatingPoint point = worst_case_point(kWorking, {}, NoiseKind::Flux);
        CHECK(point.policy == Policy::WorstCase);
        CHECK(point.phi_ext > 0.4);
        CHECK(point.phi_ext < 0.5);
        CHECK_FALSE(point.clamped);
        CHECK(point.ng == 0.5);
        CHECK(std::abs(point.phi_ext - kOracleWorstFluxPhi) < 2e-3);
        const double slope = slope_fd(kWorking, {}, NoiseKind::Flux, point);
        CHECK(slope == Approx(kOracleWorstFluxSlope).epsilon(1e-4));
        CHECK(slope > 10.0);
        CHECK(slope < 50.0);
    }
    SECTION("symmetric SQUID is clamped below half flux") {
        const CircuitParams p{20.0, 0.35, 0.0, 0.5, 0.0};
        const OperatingPoint point = worst_case_point(p, {}, NoiseKind::Flux);
        CHECK(point.clamped);
        CHECK(point.phi_ext <= kFluxScanCap);
        CHECK(kFluxScanCap - point.phi_ext < 1e-4);
    }
    SECTION("charge in the EJ = 0 limit: any interior point, slope 8 Ec") {
        const CircuitParams p{0.0, 0.35, 0.0, 0.5, 0.0};
        const OperatingPoint point = worst_case_point(p, {}, NoiseKind::Charge);
        CHECK(point.ng > 0.0);
        CHECK(point.ng < 0.5);
        const T2Result r = t2_pure(p, {}, {NoiseKind::Charge, 1e-4}, OperatingPoint::worst_case_from(p));
        CHECK(r.slope == Approx(8.0 * 0.35).epsilon(1e-6));
    }
    SECTION("charge in the transmon regime sits near a quarter period") {
        const OperatingPoint point = worst_case_point(kWorking, {}, NoiseKind::Charge);
        CHECK(std::abs(point.ng - 0.25) < 1e-3);
        CHECK(point.phi_ext == 0.0);
    }
    SECTION("critical current keeps the caller's bias") {
        const CircuitParams p{20.0, 0.35, 0.1, 0.37, 0.12};
        const OperatingPoint point = worst_case_point(p, {}, NoiseKind::CriticalCurrent);
        CHECK(point.ng == 0.37);
        CHECK(point.phi_ext == 0.12);
        CHECK(point.policy == Policy::Fixed);
    }
}

TEST_CASE("t2_pure", "[noise][t2]") {
    SECTION("sweet spot is unbounded") {
        const T2Result r = t2_pure(kWorking, {}, {NoiseKind::Charge, 1e-4}, fixed(0.5, 0.0));
        CHECK_FALSE(r.t2.is_bounded());
        CHECK(r.t2.rate() == 0.0);
    }
    SECTION("unit conversion") {
        const T2Result r = t2_pure(kWorking, {}, {NoiseKind::CriticalCurrent, 1e-6}, fixed(0.5, 0.0));
        CHECK(r.t2.seconds() ==
              Approx(1.0 / (2.0 * std::numbers::pi * 1e-6 * r.slope * 1e9)).epsilon(1e-15));
        CHECK(r.t2.seconds() > 10e-6);
        CHECK(r.t2.seconds() < 100e-6);
        CHECK(r.method == SlopeMethod::FiniteDifference);
    }
    SECTION("flux worst case is of order a microsecond") {
        const T2Result r =
            t2_pure(kWorking, {}, {NoiseKind::Flux, 1e-5}, OperatingPoint::worst_case_from(kWorking));
        CHECK(r.t2.seconds() > 0.1e-6);
        CHECK(r.t2.seconds() < 10e-6);
        CHECK(r.point.phi_ext > 0.4);
    }
    SECTION("Hellmann-Feynman method") {
        const T2Result r = t2_pure(kWorking, {}, {NoiseKind::Flux, 1e-5}, fixed(0.5, 0.3),
                                   {SlopeMethod::HellmannFeynman, {}, false});
        CHECK(r.method == SlopeMethod::HellmannFeynman);
        CHECK(r.slope == Approx(kOracleFluxSlope).epsilon(1e-10));
    }
    SECTION("T2 scales as 1/A at fixed slope") {
        const T2Options opts{SlopeMethod::FiniteDifference, {}, true};
        const double a0 = 1e-5;
        const T2Result ref = t2_pure(kWorking, {}, {NoiseKind::Flux, a0}, fixed(0.5, 0.3), opts);
        for (double a : {1e-6, 3e-6, 2e-5, 1e-3}) {
            const T2Result r = t2_pure(kWorking, {}, {NoiseKind::Flux, a}, fixed(0.5, 0.3), opts);
            CHECK(r.slope == ref.slope);
            CHECK(std::abs(r.t2.seconds() * a - ref.t2.seconds() * a0) <=
                  1e-12 * ref.t2.seconds() * a0);
        }
    }
    SECTION("amplitude outside the typical range needs the override") {
        CHECK_THROWS_AS(t2_pure(kWorking, {}, {NoiseKind::Charge, 1e-2}, fixed(0.25, 0.0)),
                        ValidationError);
        CHECK_THROWS_AS(t2_pure(kWorking, {}, {NoiseKind::Charge, 0.0}, fixed(0.25, 0.0),
                                {SlopeMethod::FiniteDifference, {}, true}),
                        ValidationError);
        CHECK_NOTHROW(t2_pure(kWorking, {}, {NoiseKind::Charge, 1e-2}, fixed(0.25, 0.0),
                              {SlopeMethod::FiniteDifference, {}, true}));
    }
}

TEST_CASE("default amplitudes lie in their ranges", "[noise]") {
    for (NoiseKind kind : kAllNoiseKinds) {
        const auto [lo, hi] = amplitude_range(kind);
        const double a = NoiseChannel::with_default_amplitude(kind).amplitude;
        CHECK(a >= lo);
        CHECK(a <= hi);
    }
}

TEST_CASE("Hellmann-Feynman guards a degenerate pair", "[noise][errors]") {
    const CircuitParams p{0.0, 0.35, 0.0, 0.5, 0.0};
    CHECK_THROWS_AS(slope_hf(p, {}, NoiseKind::Charge, fixed(0.5, 0.0)), DegeneratePair);
}

TEST_CASE("finite-difference step underflow", "[noise][errors]") {
    numerics::FiniteDifferenceSteps tiny;
    tiny.flux = 1e-15;
    CHECK_THROWS_AS(slope_fd(kWorking, {}, NoiseKind::Flux, fixed(0.5, 0.3), tiny), StepUnderflow);
}

TEST_CASE("combine_rates", "[noise][rates]") {
    const Lifetime t_phi = Lifetime::from_seconds(1.311e-6);
    CHECK(combine_rates({Lifetime::unbounded(), t_phi}).seconds() == Approx(1.311e-6).epsilon(1e-15));
    CHECK(combine_rates({Lifetime::from_seconds(50e-6), Lifetime::unbounded()}).seconds() ==
          Approx(1.0e-4).epsilon(1e-15));
    CHECK(combine_rates({Lifetime::from_seconds(50e-6), Lifetime::from_seconds(100e-6)}).seconds() ==
          Approx(5.0e-5).epsilon(1e-15));
    CHECK_FALSE(combine_rates({Lifetime::unbounded(), Lifetime::unbounded()}).is_bounded());
    CHECK_THROWS_AS(Lifetime::from_seconds(0.0), ValidationError);
    CHECK_THROWS_AS(Lifetime::from_seconds(-1.0), ValidationError);
}

TEST_CASE("combine_rates never exceeds min(2 T1, Tphi)", "[noise][rates][property]") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> log10_t(-8.0, 2.0);
    for (int draw = 0; draw < 500; ++draw) {
        const double t1 = std::pow(10.0, log10_t(rng));
        const double tphi = std::pow(10.0, log10_t(rng));
        const double t2 =
            combine_rates({Lifetime::from_seconds(t1), Lifetime::from_seconds(tphi)}).seconds();
        CHECK(t2 <= std::min(2.0 * t1, tphi));
        CHECK(t2 == 1.0 / (1.0 / t1 / 2.0 + 1.0 / tphi));
    }
}
