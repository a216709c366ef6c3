#pragma once

#include <filesystem>
#include <string_view>

#include "hypersize/scenario.hpp"

namespace hypersize {

// JSON configuration files, all quantities in SI units:
//
//   {
//     "name": "tvhc-copper",
//     "variant": "paper_simplified" | "exact",
//     "notes": { ...free-form strings... },
//     "machine":    { node_count, clock_frequency [Hz], word_width [bit],
//                     reference_word_width [bit], hop_processing_cycles,
//                     memory_response_time [s], network_diameter_override [hops] },
//     "traffic":    { load_rate, store_rate, saturation_load, traffic_factor },
//     "cooling":    { surface_power_density [W/m^2], vertical_pitch [m] },
//     "energy":     { energy_per_op [J/op] },
//     "technology": { name, medium: "guided_volume" | "open_space",
//                     link_bandwidth [bit/s], signal_speed [m/s], resistivity [Ohm m],
//                     electrical_cross_section [m^2], packing_cross_section [m^2],
//                     emitter_footprint [m^2],
//                     driver: { form: "current_voltage" | "fixed_power",
//                               signal_current [A], drive_voltage [V],
//                               per_driver_power [W] } },
//     "simulation": { thread_contexts, round_trip_cycles, latency_jitter,
//                     memory_op_probability, warmup_cycles, measured_cycles, seed }
//   }
//
// Unknown keys, wrong types and invariant violations raise InvalidConfig
// naming the dotted path of the offending field.
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& path);

} // namespace hypersize
