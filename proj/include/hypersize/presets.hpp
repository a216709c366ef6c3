#pragma once

#include <vector>

#include "hypersize/scenario.hpp"

namespace hypersize::presets {

// 50,000 x 128-bit PEs at 20 GHz on a banyan network.
MachineConfig tvhc_machine();

InterconnectTech copper();
InterconnectTech optical();   // open-space VCSEL links, 0.1 W per emitter
InterconnectTech htsc();      // ballistic superconducting wires, 10 uW drivers

Scenario tvhc_copper(Variant variant = Variant::paper_simplified);
Scenario tvhc_optical(Variant variant = Variant::paper_simplified);
Scenario tvhc_htsc(Variant variant = Variant::paper_simplified);

std::vector<Scenario> all(Variant variant = Variant::paper_simplified);

} // namespace hypersize::presets
