#include "hypersize/parallelism.hpp"

#include <cmath>

#include "hypersize/error.hpp"

namespace hypersize {

std::string_view to_string(DistanceMode m) {
    return m == DistanceMode::mean_chord ? "mean_chord" : "diameter";
}

DistanceMode parse_distance_mode(std::string_view text) {
    if (text == "diameter") return DistanceMode::diameter;
    if (text == "mean-chord" || text == "mean_chord") return DistanceMode::mean_chord;
    throw InvalidConfig("distance", "expected diameter or mean-chord, got '" +
                                        std::string(text) + "'");
}

long long LatencyBreakdown::threads_rounded() const {
    return static_cast<long long>(std::ceil(threads));
}

namespace {

void require_signal_speed(const InterconnectTech& tech) {
    if (!(tech.signal_speed > 0.0))
        throw InvalidConfig("technology.signal_speed", "must be > 0");
}

} // namespace

LatencyBreakdown latency_breakdown(double diameter, const MachineConfig& cfg,
                                   const InterconnectTech& tech, DistanceMode mode) {
    require_signal_speed(tech);
    const double D = effective_diameter(cfg);
    const double length =
        mode == DistanceMode::diameter ? diameter : mean_component_distance(diameter);

    LatencyBreakdown out;
    out.mode = mode;
    out.propagation = 2.0 * length * D / tech.signal_speed;
    out.network_processing = D * cfg.hop_processing_cycles / cfg.clock_frequency;
    out.memory = cfg.memory_response_time;
    out.total = out.propagation + out.network_processing + out.memory;
    out.threads = out.total * cfg.clock_frequency;
    return out;
}

double required_threads(double diameter, const MachineConfig& cfg,
                        const InterconnectTech& tech) {
    require_signal_speed(tech);
    return diameter * cfg.clock_frequency * (2.0 * effective_diameter(cfg) / tech.signal_speed);
}

double threads_from_performance(double performance, const MachineConfig& cfg,
                                const InterconnectTech& tech, const TrafficModel& traffic) {
    if (tech.medium != Medium::guided_volume)
        throw UnsupportedComposition(
            "threads_from_performance needs a guided-volume medium; use required_threads with "
            "the open-space packing diameter instead");
    require_signal_speed(tech);
    const double D = effective_diameter(cfg);
    return cfg.clock_frequency * std::sqrt(performance) * (2.0 / tech.signal_speed) *
           std::sqrt(traffic.traffic_factor * tech.packing_cross_section * D * D * D *
                     cfg.reference_word_width /
                     (tech.link_bandwidth * traffic.saturation_load));
}

} // namespace hypersize
