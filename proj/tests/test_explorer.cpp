#include <doctest.h>

#include <cmath>
#include <vector>

#include "hypersize/error.hpp"
#include "hypersize/explorer.hpp"
#include "hypersize/presets.hpp"
#include "test_support.hpp"

using namespace hypersize;
using hypersize::testing::rel_err;

namespace {

// Independent closed forms for the reference machine: wires, packing and
// propagation-only threads written out from the constants.
double demand() { return 20e9 * 128 * 5e4 * 16; }

double oracle_packing(double sigma, double bandwidth) { return std::sqrt(sigma * demand() / (bandwidth * 0.6)); }

double oracle_threads(double sigma, double bandwidth, double speed) {
    return oracle_packing(sigma, bandwidth) * 20e9 * 2 * 16 / speed;
}

template <typename F>
double oracle_bisect(F excess, double lo, double hi) {
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if ((excess(mid) > 0) == (excess(lo) > 0)) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

SweepSpec theta_sweep() {
    SweepSpec spec;
    spec.parameter = SweepParameter::performance;
    spec.min = 1e12;
    spec.max = 1e16;
    spec.points = 41;
    spec.spacing = Spacing::log;
    spec.base = presets::tvhc_copper();
    return spec;
}

} // namespace

TEST_CASE("sweep values") {
    auto spec = theta_sweep();
    const auto values = sweep_values(spec);
    REQUIRE(values.size() == 41);
    CHECK(values.front() == 1e12);
    CHECK(values.back() == 1e16);
    CHECK(values[30] == doctest::Approx(1e15).epsilon(1e-12));

    spec.spacing = Spacing::linear;
    spec.min = 1;
    spec.max = 5;
    spec.points = 5;
    CHECK(sweep_values(spec) == std::vector<double>{1, 2, 3, 4, 5});

    spec.points = 1;
    CHECK_THROWS_AS(sweep_values(spec), InvalidConfig);
    spec.points = 3;
    spec.min = 5;
    CHECK_THROWS_AS(sweep_values(spec), InvalidConfig);
}

TEST_CASE("theta sweep reproduces the reference row") {
    const auto rows = run_sweep(theta_sweep());
    REQUIRE(rows.size() == 41);
    const auto& golden = rows[30];
    CHECK(golden.eval.sizing.performance == doctest::Approx(1e15).epsilon(1e-12));
    CHECK(golden.eval.sizing.installation == doctest::Approx(9.74).epsilon(1e-3));
    CHECK(golden.eval.threads == doctest::Approx(69240).epsilon(2e-4));
    CHECK(golden.eval.sizing.diameter_hops == 16);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].value > rows[i - 1].value);
    // Q is re-resolved per point, so D steps with scale.
    CHECK(rows.front().eval.sizing.diameter_hops < rows.back().eval.sizing.diameter_hops);
}

TEST_CASE("pinned-diameter sweep follows the square-root law") {
    auto spec = theta_sweep();
    spec.pin_diameter = true;
    const auto rows = run_sweep(spec);
    for (std::size_t i = 10; i < rows.size(); i += 10) {
        const auto& a = rows[i - 10];
        const auto& b = rows[i];
        CHECK(a.eval.sizing.diameter_hops == 16);
        const double slope = std::log(b.eval.sizing.installation / a.eval.sizing.installation) /
                             std::log(b.eval.sizing.performance / a.eval.sizing.performance);
        CHECK(std::abs(slope - 0.5) < 1e-6);
    }

    spec.spacing = Spacing::linear;
    spec.min = 1e14;
    spec.max = 4e14;
    spec.points = 2;
    const auto pair = run_sweep(spec);
    CHECK(pair[1].eval.sizing.installation / pair[0].eval.sizing.installation ==
          doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("clock and node sweeps") {
    SweepSpec spec;
    spec.base = presets::tvhc_copper();
    spec.parameter = SweepParameter::clock_frequency;
    spec.min = 1e9;
    spec.max = 2e10;
    spec.points = 3;
    const auto clock = run_sweep(spec);
    CHECK(clock.back().machine.clock_frequency == 2e10);
    CHECK(clock.back().eval.sizing.performance == 1e15);

    spec.parameter = SweepParameter::node_count;
    spec.min = 1e3;
    spec.max = 5e4;
    const auto nodes = run_sweep(spec);
    CHECK(nodes.back().machine.node_count == 5e4);
    CHECK(nodes.front().eval.sizing.diameter_hops == 10);
}

TEST_CASE("sweep reports the failing point") {
    SweepSpec spec;
    spec.base = presets::tvhc_copper();
    spec.parameter = SweepParameter::node_count;
    spec.min = 1.0;
    spec.max = 10.0;
    spec.points = 2;
    try {
        run_sweep(spec);
        FAIL("expected EvaluationError");
    } catch (const EvaluationError& e) {
        CHECK(std::string(e.what()).find("sweep point 0") != std::string::npos);
    }
}

TEST_CASE("copper vs HTSC comparison") {
    const std::vector<InterconnectTech> techs{presets::copper(), presets::htsc()};
    const auto cols = compare_technologies(presets::tvhc_copper(), techs);
    REQUIRE(cols.size() == 2);
    REQUIRE(cols[1].ratios);
    CHECK(cols[1].ratios->packing_core == doctest::Approx(std::sqrt(3.6 / 10)).epsilon(1e-12));
    CHECK(cols[1].ratios->packing_core == doctest::Approx(0.600).epsilon(1e-3));
    CHECK(cols[1].ratios->threads == doctest::Approx(0.6 * 9e7 / 2e8).epsilon(1e-12));
    CHECK(cols[1].ratios->threads == doctest::Approx(0.27).epsilon(1e-2));

    const std::vector<InterconnectTech> same{presets::copper(), presets::copper()};
    const auto self = compare_technologies(presets::tvhc_copper(), same);
    const auto& r = *self[1].ratios;
    for (double x : {r.wire_count, r.driver_core, r.packing_core, r.installation, r.threads}) CHECK(x == 1.0);
}

TEST_CASE("comparison marks failed columns") {
    auto broken = presets::copper();
    broken.name = "broken";
    broken.packing_cross_section = -1.0;
    const std::vector<InterconnectTech> techs{presets::copper(), broken, presets::optical()};
    const auto cols = compare_technologies(presets::tvhc_copper(), techs);
    CHECK(cols[1].technology == "broken");
    CHECK_FALSE(cols[1].eval);
    CHECK_FALSE(cols[1].ratios);
    CHECK_FALSE(cols[1].error.empty());
    CHECK(cols[2].ratios);

    const std::vector<InterconnectTech> one{presets::copper()};
    CHECK_THROWS_AS(compare_technologies(presets::tvhc_copper(), one), InvalidConfig);
}

TEST_CASE("packing ratios match the analytic form for guided pairs") {
    hypersize::testing::ScenarioGenerator gen(41);
    for (int i = 0; i < 20; ++i) {
        const Scenario base = gen.guided();
        const InterconnectTech a = base.technology;
        const InterconnectTech b = gen.guided().technology;
        const std::vector<InterconnectTech> techs{a, b};
        const auto cols = compare_technologies(base, techs);
        const double expected = std::sqrt((b.packing_cross_section / a.packing_cross_section) *
                                          (a.link_bandwidth / b.link_bandwidth));
        CHECK(rel_err(cols[1].ratios->packing_core, expected) < 1e-12);
    }
}

TEST_CASE("HTSC packing break-even against a direct bisection oracle") {
    BreakEvenQuery q;
    q.baseline = presets::tvhc_copper();
    q.candidate = presets::tvhc_htsc();
    q.metric = Metric::packing_core;
    q.lo = 1e-8;
    q.hi = 1e-5;
    const auto r = break_even(q);

    const double target = oracle_packing(1e-7, 3.6e9);
    const double oracle =
        oracle_bisect([&](double s) { return oracle_packing(s, 1e10) - target; }, 1e-8, 1e-5);
    CHECK(oracle == doctest::Approx(1e-7 * 10 / 3.6).epsilon(1e-9));
    CHECK(rel_err(r.value, oracle) < 1e-3);
    CHECK(r.value == doctest::Approx(2.78e-7).epsilon(1e-3));
    CHECK(rel_err(r.candidate_metric, r.baseline_metric) < 1e-5);
    CHECK(rel_err(r.baseline_metric, target) < 1e-12);
}

TEST_CASE("HTSC thread break-even") {
    BreakEvenQuery q;
    q.baseline = presets::tvhc_copper();
    q.candidate = presets::tvhc_htsc();
    q.metric = Metric::required_threads;
    q.lo = 1e-8;
    q.hi = 1e-5;
    const auto r = break_even(q);
    const double target = oracle_threads(1e-7, 3.6e9, 9e7);
    const double oracle =
        oracle_bisect([&](double s) { return oracle_threads(s, 1e10, 2e8) - target; }, 1e-8, 1e-5);
    CHECK(rel_err(r.value, oracle) < 1e-5);
    CHECK(r.value == doctest::Approx(1.37e-6).epsilon(2e-3));
    CHECK(rel_err(r.candidate_metric, r.baseline_metric) < 1e-5);
}

TEST_CASE("break-even of a technology against itself is its own parameter") {
    BreakEvenQuery q;
    q.baseline = presets::tvhc_copper();
    q.candidate = presets::tvhc_copper();
    q.metric = Metric::installation_diameter;
    q.lo = 0.5e-7;
    q.hi = 2e-7;
    CHECK(break_even(q).value == doctest::Approx(1e-7).epsilon(1e-6));
}

TEST_CASE("break-even without a bracket reports both endpoints") {
    BreakEvenQuery q;
    q.baseline = presets::tvhc_copper();
    q.candidate = presets::tvhc_htsc();
    q.lo = 1e-6;
    q.hi = 1e-5;
    try {
        break_even(q);
        FAIL("expected NoCrossing");
    } catch (const NoCrossing& e) {
        CHECK(e.lo_value() > e.target());
        CHECK(e.hi_value() > e.target());
    }
    q.lo = 2e-5;
    CHECK_THROWS_AS(break_even(q), InvalidConfig);
}

TEST_CASE("break-even round trip across parameters and metrics") {
    struct Case {
        FreeParameter p;
        Metric m;
        Scenario candidate;
        double lo, hi;
    };
    const std::vector<Case> cases{
        {FreeParameter::link_bandwidth, Metric::packing_core, presets::tvhc_htsc(), 1e9, 1e11},
        {FreeParameter::signal_speed, Metric::required_threads, presets::tvhc_htsc(), 1e7, 3e8},
        {FreeParameter::emitter_footprint, Metric::installation_diameter, presets::tvhc_optical(), 1e-8, 1e-5},
    };
    for (const auto& c : cases) {
        BreakEvenQuery q;
        q.baseline = presets::tvhc_copper();
        q.candidate = c.candidate;
        q.free_parameter = c.p;
        q.metric = c.m;
        q.lo = c.lo;
        q.hi = c.hi;
        const auto r = break_even(q);
        const double replayed = metric_value(with_parameter(q.candidate, c.p, r.value), c.m);
        CHECK(rel_err(replayed, r.baseline_metric) < 1e-5);
    }
}

TEST_CASE("free driver power needs a fixed-power driver") {
    CHECK_THROWS_AS(with_parameter(presets::tvhc_copper(), FreeParameter::per_driver_power, 1.0),
                    InvalidConfig);
    CHECK(with_parameter(presets::tvhc_optical(), FreeParameter::per_driver_power, 0.5)
              .technology.driver.fixed_power == 0.5);
}

TEST_CASE("name parsing") {
    CHECK(parse_sweep_parameter("theta") == SweepParameter::performance);
    CHECK(parse_metric("threads") == Metric::required_threads);
    CHECK(parse_free_parameter("sigma") == FreeParameter::packing_cross_section);
    CHECK_THROWS_AS(parse_metric("volume"), InvalidConfig);
}
