#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypersize/scenario.hpp"

namespace hypersize {

// ---------------------------------------------------------------------------
// Parameter sweeps
// ---------------------------------------------------------------------------

enum class SweepParameter { performance, clock_frequency, node_count };
enum class Spacing { linear, log };

std::string_view to_string(SweepParameter p);
SweepParameter parse_sweep_parameter(std::string_view text);

struct SweepSpec {
    SweepParameter parameter = SweepParameter::performance;
    double min = 0.0;
    double max = 0.0;
    int points = 2;
    Spacing spacing = Spacing::linear;
    // Hold D at the base configuration's value instead of re-resolving it per point.
    bool pin_diameter = false;
    DistanceMode distance = DistanceMode::diameter;
    Scenario base;

    void validate() const;
};

struct SweepRow {
    double value;            // swept parameter value
    MachineConfig machine;   // machine actually evaluated
    Evaluation eval;
};

std::vector<double> sweep_values(const SweepSpec& spec);

// Sweeping performance adjusts Q at fixed f0, W, W0. Rows are in sweep order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// ---------------------------------------------------------------------------
// Technology comparison
// ---------------------------------------------------------------------------

struct TechnologyRatios {
    double wire_count;
    double driver_core;
    double packing_core;
    double installation;
    double threads;
};

struct TechnologyColumn {
    std::string technology;
    std::optional<Evaluation> eval;      // empty when sizing failed
    std::string error;
    std::optional<TechnologyRatios> ratios;  // vs the first column
};

std::vector<TechnologyColumn> compare_technologies(const Scenario& base,
                                                   std::span<const InterconnectTech> technologies,
                                                   DistanceMode distance = DistanceMode::diameter);

// ---------------------------------------------------------------------------
// Break-even between two technologies
// ---------------------------------------------------------------------------

enum class FreeParameter {
    packing_cross_section,
    emitter_footprint,
    link_bandwidth,
    signal_speed,
    per_driver_power,
};

enum class Metric { packing_core, installation_diameter, required_threads };

std::string_view to_string(FreeParameter p);
std::string_view to_string(Metric m);
FreeParameter parse_free_parameter(std::string_view text);
Metric parse_metric(std::string_view text);

struct BreakEvenQuery {
    Scenario baseline;
    Scenario candidate;
    FreeParameter free_parameter = FreeParameter::packing_cross_section;
    Metric metric = Metric::packing_core;
    double lo = 0.0;
    double hi = 0.0;
};

struct BreakEvenResult {
    double value;
    double baseline_metric;
    double candidate_metric;
    int iterations;
};

inline constexpr double kBreakEvenRelativeTolerance = 1e-6;

double metric_value(const Scenario& s, Metric metric);
Scenario with_parameter(Scenario s, FreeParameter p, double value);

// Bisection on the candidate's free parameter until its metric matches the
// baseline's. Throws NoCrossing when the endpoints do not bracket it.
BreakEvenResult break_even(const BreakEvenQuery& query);

} // namespace hypersize
