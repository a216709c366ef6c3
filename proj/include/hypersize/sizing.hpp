#pragma once

#include <string_view>

#include "hypersize/machine_model.hpp"

namespace hypersize {

struct EnergyModel {
    double energy_per_op = 1.0e-10;  // w, J/op

    // Operation-equivalents per PE op: PE + memory (2) plus QD/2 switches per Q.
    static double activity_factor(double diameter_hops) { return 2.0 + diameter_hops / 2.0; }
    void validate() const;
};

// Listed in tie-break order.
enum class Binding { static_core, dynamic_core, driver_core, packing };

std::string_view to_string(Binding b);

struct SizingReport {
    double wire_count = 0.0;       // N
    double performance = 0.0;      // Theta, ops/s
    double diameter_hops = 0.0;    // D used for this report
    double static_core = 0.0;      // L_st, m
    double dynamic_core = 0.0;     // L_dyn, m
    double driver_core = 0.0;      // L_dr, m
    double power_core = 0.0;       // L_pow, m
    double packing_core = 0.0;     // L_g, m
    double installation = 0.0;     // L, m
    Binding binding = Binding::static_core;
    Variant variant = Variant::paper_simplified;
};

struct PowerCore {
    double diameter;
    Binding binding;
};

// Ohmic dissipation of N wires of mean length mean_coeff * L. Zero for
// open-space media and for zero-resistivity (superconducting) wires.
double static_power(double wires, double diameter, const InterconnectTech& tech,
                    double mean_coeff = kSphereMeanDistanceCoefficient);

// Static thermal core. paper_simplified evaluates the closed square-root
// form directly; exact solves P_s(L) = p_v * pi * L^3 / 6.
double static_core_diameter(double performance, const MachineConfig& cfg,
                            const InterconnectTech& tech, const TrafficModel& traffic,
                            const CoolingModel& cooling, Variant variant);

double dynamic_core_diameter(double performance, double diameter_hops,
                             const EnergyModel& energy, const CoolingModel& cooling);

// sqrt(2 N P1 / (pi p_s)): 2N drivers on the active shell surface.
double driver_core_diameter(double wires, const DriverModel& driver,
                            const CoolingModel& cooling);

PowerCore power_core_diameter(double static_core, double dynamic_core, double driver_core);

// Guided: sqrt(sigma N) or sqrt(12 sigma N)/pi. Open space: sqrt(4 N sigma_LE / pi).
double packing_diameter(double wires, const InterconnectTech& tech, Variant variant);

SizingReport size_installation(const MachineConfig& cfg, const InterconnectTech& tech,
                               const TrafficModel& traffic, const CoolingModel& cooling,
                               const EnergyModel& energy, Variant variant);

} // namespace hypersize
