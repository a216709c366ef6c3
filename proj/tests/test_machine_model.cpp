#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hypersize/error.hpp"
#include "hypersize/machine_model.hpp"
#include "hypersize/presets.hpp"
#include "test_support.hpp"

using namespace hypersize;
using hypersize::testing::rel_err;

TEST_CASE("network diameter rounds log2 up") {
    CHECK(network_diameter(50000) == 16);
    CHECK(network_diameter(2) == 1);
    CHECK(network_diameter(1024) == 10);
    CHECK(network_diameter(1025) == 11);
    for (int k = 1; k <= 30; ++k) CHECK(network_diameter(std::ldexp(1.0, k)) == k);
}

TEST_CASE("network diameter rejects fewer than two nodes") {
    CHECK_THROWS_AS(network_diameter(1.0), InvalidConfig);
    CHECK_THROWS_AS(network_diameter(0.0), InvalidConfig);
    try {
        network_diameter(1.5);
    } catch (const InvalidConfig& e) {
        CHECK(e.field() == "machine.node_count");
    }
}

TEST_CASE("diameter override bypasses log2") {
    MachineConfig m = presets::tvhc_machine();
    CHECK(effective_diameter(m) == 16.0);
    m.network_diameter_override = 7.0;
    CHECK(effective_diameter(m) == 7.0);
}

TEST_CASE("wire count for the reference copper machine") {
    const auto m = presets::tvhc_machine();
    const auto cu = presets::copper();
    const double oracle = 20e9 * 128 * 5e4 * 16 / (3.6e9 * 0.6);

    const double simplified = wire_count(m, cu, TrafficModel::for_variant(Variant::paper_simplified));
    CHECK(rel_err(simplified, oracle) < 1e-12);
    CHECK(rel_err(simplified, 9.481e8) < 1e-3);

    const double exact = wire_count(m, cu, TrafficModel::for_variant(Variant::exact));
    CHECK(rel_err(exact, 1.1 * oracle) < 1e-12);
    CHECK(rel_err(exact, 1.043e9) < 1e-3);
}

TEST_CASE("wire count collapses to one when demand equals usable link bandwidth") {
    MachineConfig m;
    m.node_count = 4;
    m.clock_frequency = 3.0;
    m.word_width = 5.0;
    m.network_diameter_override = 2.0;
    InterconnectTech t = presets::copper();
    TrafficModel traffic;
    traffic.saturation_load = 0.5;
    t.link_bandwidth = 3.0 * 5.0 * 4.0 * 2.0 / 0.5;
    CHECK(wire_count(m, t, traffic) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("wire count rejects non-positive bandwidth or saturation load") {
    const auto m = presets::tvhc_machine();
    auto t = presets::copper();
    TrafficModel traffic;
    t.link_bandwidth = 0.0;
    CHECK_THROWS_AS(wire_count(m, t, traffic), InvalidConfig);
    t = presets::copper();
    traffic.saturation_load = 0.0;
    CHECK_THROWS_AS(wire_count(m, t, traffic), InvalidConfig);
}

TEST_CASE("wire count scales linearly in each driver of demand") {
    hypersize::testing::ScenarioGenerator gen(11);
    for (int i = 0; i < 50; ++i) {
        const Scenario s = gen.guided();
        const double n = wire_count(s.machine, s.technology, s.traffic);
        auto scaled = [&](auto mutate) {
            Scenario c = s;
            mutate(c);
            return wire_count(c.machine, c.technology, c.traffic) / n;
        };
        CHECK(scaled([](Scenario& c) { c.machine.clock_frequency *= 2; }) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(scaled([](Scenario& c) { c.machine.word_width *= 2; }) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(scaled([](Scenario& c) { c.machine.node_count *= 2; }) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(scaled([](Scenario& c) { *c.machine.network_diameter_override *= 2; }) ==
              doctest::Approx(2.0).epsilon(1e-14));
        CHECK(scaled([](Scenario& c) { c.technology.link_bandwidth *= 2; }) ==
              doctest::Approx(0.5).epsilon(1e-14));
        CHECK(scaled([](Scenario& c) { c.traffic.saturation_load /= 2; }) ==
              doctest::Approx(2.0).epsilon(1e-14));

        Scenario exact = s;
        exact.traffic = TrafficModel::for_variant(Variant::exact);
        exact.traffic.saturation_load = s.traffic.saturation_load;
        CHECK(rel_err(wire_count(exact.machine, exact.technology, exact.traffic), 1.1 * n) < 1e-14);
    }
}

TEST_CASE("peak performance") {
    CHECK(peak_performance(presets::tvhc_machine()) == 1e15);

    MachineConfig unit;
    unit.node_count = 1;
    unit.clock_frequency = 1;
    unit.word_width = 64;
    unit.reference_word_width = 64;
    CHECK(peak_performance(unit) == 1.0);

    MachineConfig m = presets::tvhc_machine();
    m.word_width = m.reference_word_width = 64;
    CHECK(peak_performance(m) == m.node_count * m.clock_frequency);

    m.reference_word_width = 0;
    CHECK_THROWS_AS(peak_performance(m), InvalidConfig);
}

TEST_CASE("peak performance is invariant under common word-width scaling") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> k(0.1, 10.0);
    const auto m = presets::tvhc_machine();
    for (int i = 0; i < 100; ++i) {
        MachineConfig c = m;
        const double f = k(rng);
        c.word_width *= f;
        c.reference_word_width *= f;
        CHECK(rel_err(peak_performance(c), peak_performance(m)) < 1e-14);
    }
}

TEST_CASE("mean component distance uses 2/pi by default") {
    CHECK(mean_component_distance(1.0) == doctest::Approx(0.6366).epsilon(1e-4));
    CHECK(mean_component_distance(0.0) == 0.0);
    CHECK(mean_component_distance(3.0, 0.5) == 1.5);
}

TEST_CASE("Monte-Carlo chord mean on a unit-diameter sphere is 2/3, not 2/pi") {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> g(0.0, 1.0);
    auto point = [&] {
        double x = g(rng), y = g(rng), z = g(rng);
        const double r = std::sqrt(x * x + y * y + z * z) * 2.0;  // radius 1/2
        return std::array<double, 3>{x / r, y / r, z / r};
    };
    const int pairs = 1'000'000;
    double sum = 0.0;
    for (int i = 0; i < pairs; ++i) {
        const auto a = point();
        const auto b = point();
        sum += std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
    }
    const double mean = sum / pairs;
    CHECK(mean == doctest::Approx(2.0 / 3.0).epsilon(2e-3));
    CHECK(std::abs(mean - kSphereMeanDistanceCoefficient) > 0.02);
}

TEST_CASE("configuration validation names the field") {
    auto expect_field = [](auto&& fn, const std::string& field) {
        try {
            fn();
            FAIL("expected InvalidConfig for " << field);
        } catch (const InvalidConfig& e) {
            CHECK(e.field() == field);
        }
    };
    MachineConfig m;
    m.clock_frequency = 0;
    expect_field([&] { m.validate(); }, "machine.clock_frequency");

    TrafficModel t;
    t.saturation_load = 1.5;
    expect_field([&] { t.validate(); }, "traffic.saturation_load");

    CoolingModel c;
    c.vertical_pitch = -1;
    expect_field([&] { c.validate(); }, "cooling.vertical_pitch");

    auto cu = presets::copper();
    cu.signal_speed = 4e8;
    expect_field([&] { cu.validate(); }, "technology.signal_speed");

    auto opt = presets::optical();
    opt.emitter_footprint = 0;
    expect_field([&] { opt.validate(); }, "technology.emitter_footprint");

    auto htsc = presets::htsc();
    htsc.driver.fixed_power = 0;
    expect_field([&] { htsc.validate(); }, "technology.driver.per_driver_power");
}

TEST_CASE("cooling derives volumetric density exactly") {
    CoolingModel c;
    CHECK(c.volumetric_power_density() == 5e5 / 5e-3);
    CHECK(c.volumetric_power_density() == doctest::Approx(1e8));
}

TEST_CASE("driver power") {
    CHECK(DriverModel::from_current_voltage(0.02, 1.0).per_driver_power() == doctest::Approx(0.02));
    CHECK(DriverModel::from_power(1e-5).per_driver_power() == 1e-5);
}
