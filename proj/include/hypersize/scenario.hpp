#pragma once

#include <optional>
#include <string>

#include "hypersize/balance_sim.hpp"
#include "hypersize/machine_model.hpp"
#include "hypersize/parallelism.hpp"
#include "hypersize/sizing.hpp"

namespace hypersize {

// Everything needed to size one machine with one interconnect technology.
struct Scenario {
    std::string name;
    MachineConfig machine;
    TrafficModel traffic;
    CoolingModel cooling;
    EnergyModel energy;
    InterconnectTech technology;
    Variant variant = Variant::paper_simplified;
    std::optional<SimConfig> simulation;

    void validate() const;
};

struct Evaluation {
    SizingReport sizing;
    LatencyBreakdown latency;   // full round trip under the chosen distance mode
    double threads = 0.0;       // propagation-only estimate from the installation diameter
};

// Switches the formula variant and resets the traffic factor to match it.
Scenario with_variant(Scenario s, Variant v);

Evaluation evaluate(const Scenario& s, DistanceMode distance = DistanceMode::diameter);

} // namespace hypersize
