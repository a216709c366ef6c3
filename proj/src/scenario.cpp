#include "hypersize/scenario.hpp"

namespace hypersize {

void Scenario::validate() const {
    machine.validate();
    traffic.validate();
    cooling.validate();
    energy.validate();
    technology.validate();
    if (simulation) simulation->validate();
}

Scenario with_variant(Scenario s, Variant v) {
    s.variant = v;
    s.traffic.traffic_factor = TrafficModel::for_variant(v).traffic_factor;
    return s;
}

Evaluation evaluate(const Scenario& s, DistanceMode distance) {
    Evaluation e;
    e.sizing = size_installation(s.machine, s.technology, s.traffic, s.cooling, s.energy,
                                 s.variant);
    e.latency = latency_breakdown(e.sizing.installation, s.machine, s.technology, distance);
    e.threads = required_threads(e.sizing.installation, s.machine, s.technology);
    return e;
}

} // namespace hypersize
