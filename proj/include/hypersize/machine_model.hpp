#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <string_view>

namespace hypersize {

// Mean straight-line distance between two components on the sphere, as a
// fraction of the sphere diameter. The uniform-surface chord mean is 2/3;
// the sizing formulas are calibrated against 2/pi.
inline constexpr double kSphereMeanDistanceCoefficient = 2.0 / std::numbers::pi;

enum class Variant { paper_simplified, exact };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);

struct MachineConfig {
    double node_count = 5.0e4;              // Q, PE/memory node pairs
    double clock_frequency = 2.0e10;        // f0, Hz
    double word_width = 128.0;              // W, bits
    double reference_word_width = 128.0;    // W0, bits
    double hop_processing_cycles = 10.0;    // C, cycles per hop
    double memory_response_time = 1.0e-9;   // tau_m, s
    std::optional<double> network_diameter_override;  // hops

    void validate() const;
};

struct TrafficModel {
    double load_rate = 1.32;        // requests/cycle
    double store_rate = 0.78;       // replies/cycle
    double saturation_load = 0.6;   // alpha
    double traffic_factor = 1.0;    // multiplier on f0*W*Q in the wire count

    static TrafficModel for_variant(Variant v);
    void validate() const;
};

struct CoolingModel {
    double surface_power_density = 5.0e5;  // p_s, W/m^2
    double vertical_pitch = 5.0e-3;        // h, m

    double volumetric_power_density() const { return surface_power_density / vertical_pitch; }
    void validate() const;
};

enum class DriverForm { current_voltage, fixed_power };

struct DriverModel {
    DriverForm form = DriverForm::current_voltage;
    double signal_current = 0.0;   // I, A
    double drive_voltage = 0.0;    // U, V
    double fixed_power = 0.0;      // P1, W (fixed_power form only)

    static DriverModel from_current_voltage(double current, double voltage);
    static DriverModel from_power(double watts);

    // P1: I*U for current/voltage drivers, the fixed figure otherwise.
    double per_driver_power() const;
    void validate() const;
};

enum class Medium { guided_volume, open_space };

std::string_view to_string(Medium m);

struct InterconnectTech {
    std::string name;
    Medium medium = Medium::guided_volume;
    double link_bandwidth = 0.0;            // B_w, bit/s
    double signal_speed = 0.0;              // c_s, m/s
    double resistivity = 0.0;               // rho, Ohm*m (guided)
    double electrical_cross_section = 0.0;  // sigma_w, m^2 (guided)
    double packing_cross_section = 0.0;     // sigma, m^2 (guided)
    double emitter_footprint = 0.0;         // sigma_LE, m^2 (open space)
    DriverModel driver;

    void validate() const;
};

inline constexpr double kSpeedOfLight = 3.0e8;

// ceil(log2 Q); throws InvalidConfig for Q < 2.
int network_diameter(double node_count);

// Override if present, otherwise network_diameter(Q).
double effective_diameter(const MachineConfig& cfg);

// N = factor * f0 * W * Q * D / (B_w * alpha), kept real-valued.
double wire_count(const MachineConfig& cfg, const InterconnectTech& tech,
                  const TrafficModel& traffic);

// Theta = Q * f0 * W / W0.
double peak_performance(const MachineConfig& cfg);

double mean_component_distance(double diameter,
                               double coefficient = kSphereMeanDistanceCoefficient);

} // namespace hypersize
