#include "hypersize/sizing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypersize/error.hpp"

namespace hypersize {

using std::numbers::pi;

std::string_view to_string(Binding b) {
    switch (b) {
    case Binding::static_core: return "static";
    case Binding::dynamic_core: return "dynamic";
    case Binding::driver_core: return "driver";
    case Binding::packing: return "packing";
    }
    return "unknown";
}

void EnergyModel::validate() const {
    if (!(energy_per_op > 0.0) || !std::isfinite(energy_per_op))
        throw InvalidConfig("energy.energy_per_op", "must be > 0");
}

namespace {

bool dissipates_statically(const InterconnectTech& tech) {
    return tech.medium == Medium::guided_volume && tech.resistivity > 0.0;
}

double ohmic_current(const InterconnectTech& tech) {
    if (tech.driver.form != DriverForm::current_voltage)
        throw InvalidConfig("technology.driver.signal_current",
                            "resistive wires need a current/voltage driver");
    if (!(tech.electrical_cross_section > 0.0))
        throw InvalidConfig("technology.electrical_cross_section", "must be > 0");
    return tech.driver.signal_current;
}

} // namespace

double static_power(double wires, double diameter, const InterconnectTech& tech,
                    double mean_coeff) {
    if (!dissipates_statically(tech)) return 0.0;
    const double current = ohmic_current(tech);
    return current * current * tech.resistivity * wires *
           mean_component_distance(diameter, mean_coeff) / tech.electrical_cross_section;
}

double static_core_diameter(double performance, const MachineConfig& cfg,
                            const InterconnectTech& tech, const TrafficModel& traffic,
                            const CoolingModel& cooling, Variant variant) {
    const double p_v = cooling.volumetric_power_density();
    if (!(p_v > 0.0)) throw InvalidConfig("cooling.surface_power_density", "p_v must be > 0");
    if (!dissipates_statically(tech)) return 0.0;

    const double current = ohmic_current(tech);
    const double D = effective_diameter(cfg);
    const double alpha = traffic.saturation_load;
    const double i2_rho = current * current * tech.resistivity;

    if (variant == Variant::paper_simplified) {
        return std::sqrt(performance * cfg.reference_word_width * i2_rho * D /
                         (tech.electrical_cross_section * p_v * tech.link_bandwidth * alpha));
    }
    // Theta * W0 stands in for f0 * W * Q so the core tracks the requested Theta.
    const double wires = traffic.traffic_factor * performance * cfg.reference_word_width * D /
                         (tech.link_bandwidth * alpha);
    return std::sqrt(12.0 * i2_rho * wires / (pi * pi * tech.electrical_cross_section * p_v));
}

double dynamic_core_diameter(double performance, double diameter_hops,
                             const EnergyModel& energy, const CoolingModel& cooling) {
    return std::sqrt(performance * energy.energy_per_op *
                     EnergyModel::activity_factor(diameter_hops) /
                     (pi * cooling.surface_power_density));
}

double driver_core_diameter(double wires, const DriverModel& driver,
                            const CoolingModel& cooling) {
    const double p1 = driver.per_driver_power();
    if (!(p1 > 0.0))
        throw InvalidConfig("technology.driver.per_driver_power", "per-driver power must be > 0");
    return std::sqrt(2.0 * wires * p1 / (pi * cooling.surface_power_density));
}

PowerCore power_core_diameter(double static_core, double dynamic_core, double driver_core) {
    PowerCore best{static_core, Binding::static_core};
    if (dynamic_core > best.diameter) best = {dynamic_core, Binding::dynamic_core};
    if (driver_core > best.diameter) best = {driver_core, Binding::driver_core};
    return best;
}

double packing_diameter(double wires, const InterconnectTech& tech, Variant variant) {
    if (tech.medium == Medium::open_space) {
        if (!(tech.emitter_footprint > 0.0))
            throw InvalidConfig("technology.emitter_footprint", "must be > 0 for open-space media");
        return std::sqrt(4.0 * wires * tech.emitter_footprint / pi);
    }
    if (!(tech.packing_cross_section > 0.0))
        throw InvalidConfig("technology.packing_cross_section", "must be > 0 for guided media");
    if (variant == Variant::paper_simplified)
        return std::sqrt(tech.packing_cross_section * wires);
    return std::sqrt(12.0 * tech.packing_cross_section * wires) / pi;
}

SizingReport size_installation(const MachineConfig& cfg, const InterconnectTech& tech,
                               const TrafficModel& traffic, const CoolingModel& cooling,
                               const EnergyModel& energy, Variant variant) {
    cfg.validate();
    tech.validate();
    traffic.validate();
    cooling.validate();
    energy.validate();

    SizingReport r;
    r.variant = variant;
    r.diameter_hops = effective_diameter(cfg);
    r.wire_count = wire_count(cfg, tech, traffic);
    r.performance = peak_performance(cfg);
    r.static_core = static_core_diameter(r.performance, cfg, tech, traffic, cooling, variant);
    r.dynamic_core = dynamic_core_diameter(r.performance, r.diameter_hops, energy, cooling);
    r.driver_core = driver_core_diameter(r.wire_count, tech.driver, cooling);
    const PowerCore pow = power_core_diameter(r.static_core, r.dynamic_core, r.driver_core);
    r.power_core = pow.diameter;
    r.packing_core = packing_diameter(r.wire_count, tech, variant);
    r.binding = pow.binding;
    r.installation = pow.diameter;
    if (r.packing_core > r.installation) {
        r.installation = r.packing_core;
        r.binding = Binding::packing;
    }
    return r;
}

} // namespace hypersize
