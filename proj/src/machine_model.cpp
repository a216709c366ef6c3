#include "hypersize/machine_model.hpp"

#include <cmath>

#include "hypersize/error.hpp"

namespace hypersize {

namespace {

void require(bool ok, const char* field, const char* what) {
    if (!ok) throw InvalidConfig(field, what);
}

bool finite(double x) { return std::isfinite(x); }

} // namespace

std::string_view to_string(Variant v) {
    return v == Variant::exact ? "exact" : "paper_simplified";
}

Variant parse_variant(std::string_view text) {
    if (text == "paper_simplified" || text == "paper-simplified" || text == "simplified")
        return Variant::paper_simplified;
    if (text == "exact") return Variant::exact;
    throw InvalidConfig("variant", "expected paper_simplified or exact, got '" +
                                       std::string(text) + "'");
}

std::string_view to_string(Medium m) {
    return m == Medium::open_space ? "open_space" : "guided_volume";
}

void MachineConfig::validate() const {
    require(finite(node_count) && node_count >= 2.0, "machine.node_count", "must be >= 2");
    require(finite(clock_frequency) && clock_frequency > 0.0, "machine.clock_frequency",
            "must be > 0");
    require(finite(word_width) && word_width >= 1.0, "machine.word_width", "must be >= 1");
    require(finite(reference_word_width) && reference_word_width >= 1.0,
            "machine.reference_word_width", "must be >= 1");
    require(finite(hop_processing_cycles) && hop_processing_cycles >= 0.0,
            "machine.hop_processing_cycles", "must be >= 0");
    require(finite(memory_response_time) && memory_response_time >= 0.0,
            "machine.memory_response_time", "must be >= 0");
    if (network_diameter_override) {
        require(finite(*network_diameter_override) && *network_diameter_override > 0.0,
                "machine.network_diameter_override", "must be > 0");
    }
}

TrafficModel TrafficModel::for_variant(Variant v) {
    TrafficModel t;
    t.traffic_factor = v == Variant::exact ? 1.1 : 1.0;
    return t;
}

void TrafficModel::validate() const {
    require(finite(load_rate) && load_rate >= 0.0, "traffic.load_rate", "must be >= 0");
    require(finite(store_rate) && store_rate >= 0.0, "traffic.store_rate", "must be >= 0");
    require(finite(saturation_load) && saturation_load > 0.0 && saturation_load <= 1.0,
            "traffic.saturation_load", "must be in (0, 1]");
    require(traffic_factor == 1.0 || traffic_factor == 1.1, "traffic.traffic_factor",
            "must be 1.0 (paper_simplified) or 1.1 (exact)");
}

void CoolingModel::validate() const {
    require(finite(surface_power_density) && surface_power_density > 0.0,
            "cooling.surface_power_density", "must be > 0");
    require(finite(vertical_pitch) && vertical_pitch > 0.0, "cooling.vertical_pitch",
            "must be > 0");
}

DriverModel DriverModel::from_current_voltage(double current, double voltage) {
    DriverModel d;
    d.form = DriverForm::current_voltage;
    d.signal_current = current;
    d.drive_voltage = voltage;
    return d;
}

DriverModel DriverModel::from_power(double watts) {
    DriverModel d;
    d.form = DriverForm::fixed_power;
    d.fixed_power = watts;
    return d;
}

double DriverModel::per_driver_power() const {
    return form == DriverForm::current_voltage ? signal_current * drive_voltage : fixed_power;
}

void DriverModel::validate() const {
    if (form == DriverForm::current_voltage) {
        require(finite(signal_current) && signal_current > 0.0,
                "technology.driver.signal_current", "must be > 0");
        require(finite(drive_voltage) && drive_voltage > 0.0, "technology.driver.drive_voltage",
                "must be > 0");
    } else {
        require(finite(fixed_power) && fixed_power > 0.0, "technology.driver.per_driver_power",
                "must be > 0");
    }
}

void InterconnectTech::validate() const {
    require(finite(link_bandwidth) && link_bandwidth > 0.0, "technology.link_bandwidth",
            "must be > 0");
    require(finite(signal_speed) && signal_speed > 0.0 && signal_speed <= kSpeedOfLight,
            "technology.signal_speed", "must be in (0, 3e8]");
    if (medium == Medium::guided_volume) {
        require(finite(resistivity) && resistivity >= 0.0, "technology.resistivity",
                "must be >= 0 for guided media");
        require(finite(electrical_cross_section) && electrical_cross_section > 0.0,
                "technology.electrical_cross_section", "must be > 0 for guided media");
        require(finite(packing_cross_section) && packing_cross_section > 0.0,
                "technology.packing_cross_section", "must be > 0 for guided media");
    } else {
        require(finite(emitter_footprint) && emitter_footprint > 0.0,
                "technology.emitter_footprint", "must be > 0 for open-space media");
    }
    driver.validate();
}

int network_diameter(double node_count) {
    if (!(node_count >= 2.0) || !std::isfinite(node_count))
        throw InvalidConfig("machine.node_count", "must be >= 2");
    return static_cast<int>(std::ceil(std::log2(node_count)));
}

double effective_diameter(const MachineConfig& cfg) {
    if (cfg.network_diameter_override) return *cfg.network_diameter_override;
    return network_diameter(cfg.node_count);
}

double wire_count(const MachineConfig& cfg, const InterconnectTech& tech,
                  const TrafficModel& traffic) {
    require(tech.link_bandwidth > 0.0, "technology.link_bandwidth", "must be > 0");
    require(traffic.saturation_load > 0.0 && traffic.saturation_load <= 1.0,
            "traffic.saturation_load", "must be in (0, 1]");
    const double D = effective_diameter(cfg);
    return traffic.traffic_factor * cfg.clock_frequency * cfg.word_width * cfg.node_count * D /
           (tech.link_bandwidth * traffic.saturation_load);
}

double peak_performance(const MachineConfig& cfg) {
    require(cfg.reference_word_width > 0.0, "machine.reference_word_width", "must be > 0");
    return cfg.node_count * cfg.clock_frequency * (cfg.word_width / cfg.reference_word_width);
}

double mean_component_distance(double diameter, double coefficient) {
    return coefficient * diameter;
}

} // namespace hypersize
