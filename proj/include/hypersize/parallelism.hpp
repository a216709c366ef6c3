#pragma once

#include <string_view>

#include "hypersize/machine_model.hpp"

namespace hypersize {

// Which length enters the propagation term: the full installation diameter
// or the mean component distance (2/pi of it).
enum class DistanceMode { diameter, mean_chord };

std::string_view to_string(DistanceMode m);
DistanceMode parse_distance_mode(std::string_view text);

struct LatencyBreakdown {
    double propagation = 0.0;         // tau_p, s
    double network_processing = 0.0;  // tau_n, s
    double memory = 0.0;              // tau_m, s
    double total = 0.0;               // s
    double threads = 0.0;             // total * f0
    DistanceMode mode = DistanceMode::diameter;

    long long threads_rounded() const;
};

LatencyBreakdown latency_breakdown(double diameter, const MachineConfig& cfg,
                                   const InterconnectTech& tech,
                                   DistanceMode mode = DistanceMode::diameter);

// Propagation-dominated thread count: T = L f0 (2D / c_s).
double required_threads(double diameter, const MachineConfig& cfg,
                        const InterconnectTech& tech);

// T = f0 sqrt(Theta) (2/c_s) sqrt(sigma D^3 W0 / (B_w alpha)); guided media only,
// since it composes the volume-packing diameter.
double threads_from_performance(double performance, const MachineConfig& cfg,
                                const InterconnectTech& tech, const TrafficModel& traffic);

} // namespace hypersize
