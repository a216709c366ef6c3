#include "hypersize/presets.hpp"

namespace hypersize::presets {

MachineConfig tvhc_machine() {
    MachineConfig m;
    m.node_count = 5.0e4;
    m.clock_frequency = 2.0e10;
    m.word_width = 128.0;
    m.reference_word_width = 128.0;
    m.hop_processing_cycles = 10.0;
    m.memory_response_time = 1.0e-9;
    return m;
}

InterconnectTech copper() {
    InterconnectTech t;
    t.name = "copper";
    t.medium = Medium::guided_volume;
    t.link_bandwidth = 3.6e9;
    t.signal_speed = 9.0e7;
    t.resistivity = 17.5e-9;
    t.electrical_cross_section = 2.5e-8;
    t.packing_cross_section = 1.0e-7;
    t.driver = DriverModel::from_current_voltage(0.02, 1.0);
    return t;
}

InterconnectTech optical() {
    InterconnectTech t;
    t.name = "optical";
    t.medium = Medium::open_space;
    t.link_bandwidth = 4.0e10;
    t.signal_speed = 3.0e8;
    t.emitter_footprint = 200e-6 * 200e-6;
    t.driver = DriverModel::from_power(0.1);
    return t;
}

InterconnectTech htsc() {
    InterconnectTech t;
    t.name = "htsc";
    t.medium = Medium::guided_volume;
    t.link_bandwidth = 1.0e10;
    t.signal_speed = 2.0e8;
    t.resistivity = 0.0;
    // Cross-sections are unknown for ceramic wires; copper's are carried over.
    t.electrical_cross_section = 2.5e-8;
    t.packing_cross_section = 1.0e-7;
    t.driver = DriverModel::from_power(1.0e-5);
    return t;
}

namespace {

Scenario make(const char* name, InterconnectTech tech, Variant variant) {
    Scenario s;
    s.name = name;
    s.machine = tvhc_machine();
    s.traffic = TrafficModel::for_variant(variant);
    s.technology = std::move(tech);
    s.variant = variant;
    return s;
}

} // namespace

Scenario tvhc_copper(Variant variant) { return make("tvhc-copper", copper(), variant); }
Scenario tvhc_optical(Variant variant) { return make("tvhc-optical", optical(), variant); }
Scenario tvhc_htsc(Variant variant) { return make("tvhc-htsc", htsc(), variant); }

std::vector<Scenario> all(Variant variant) {
    return {tvhc_copper(variant), tvhc_optical(variant), tvhc_htsc(variant)};
}

} // namespace hypersize::presets
