#include "hypersize/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypersize/explorer.hpp"
#include "hypersize/presets.hpp"

namespace hypersize {

namespace {

using std::numbers::pi;

Discrepancy static_core() {
    const auto e = evaluate(presets::tvhc_copper());
    return {"static_core", "reference copper static thermal core diameter", "m", 0.008,
            e.sizing.static_core,
            "closed form with the reference copper constants; never the binding constraint"};
}

Discrepancy network_processing() {
    const auto e = evaluate(presets::tvhc_copper());
    return {"network_processing_latency", "per-access message processing time tau_n = D*C/f0",
            "s", 5e-9, e.latency.network_processing, "D = 16 hops, C = 10 cycles, f0 = 20 GHz"};
}

Discrepancy propagation(DistanceMode mode) {
    const auto e = evaluate(presets::tvhc_copper(), mode);
    if (mode == DistanceMode::diameter) {
        return {"propagation_latency_diameter",
                "signal propagation time tau_p with the full installation diameter", "s", 2.25e-6,
                e.latency.propagation,
                "diameter mode reproduces the headline thread count, not the quoted tau_p"};
    }
    return {"propagation_latency_mean_chord",
            "signal propagation time tau_p with the mean component distance", "s", 2.25e-6,
            e.latency.propagation, "mean-chord mode is within 3% of the quoted tau_p"};
}

Discrepancy mean_distance() {
    return {"mean_distance_coefficient",
            "mean distance between two points on a sphere surface / diameter", "1",
            kSphereMeanDistanceCoefficient, 2.0 / 3.0,
            "formula value is the uniform-surface chord mean; models use 2/pi"};
}

Discrepancy emitter_power() {
    // Per-emitter power that puts the optical driver core at the published 3.3 m.
    const auto s = presets::tvhc_optical();
    const double wires = wire_count(s.machine, s.technology, s.traffic);
    const double published_core = 3.3;
    const double implied =
        pi * s.cooling.surface_power_density * published_core * published_core / (2.0 * wires);
    return {"optical_emitter_power", "per-emitter power of a 40 Gbps optical link", "W", 1e-4,
            implied, "the published 3.3 m driver core needs ~0.1 W per emitter; preset uses 0.1 W"};
}

Discrepancy htsc_driver_core() {
    const auto e = evaluate(presets::tvhc_htsc());
    return {"htsc_driver_core", "superconducting driver core diameter with 10 uW drivers", "m",
            0.5, e.sizing.driver_core, "driver core sized by the same 2*N*P1 surface budget"};
}

Discrepancy htsc_thread_reduction() {
    const auto cu = evaluate(presets::tvhc_copper());
    const auto sc = evaluate(presets::tvhc_htsc());
    return {"htsc_thread_reduction", "fractional reduction of required threads, HTSC vs copper",
            "1", 0.60, 1.0 - sc.threads / cu.threads,
            "packing shrinks by sqrt(3.6/10) and signal speed rises by 2e8/9e7"};
}

Discrepancy htsc_break_even(Metric metric) {
    BreakEvenQuery q;
    q.baseline = presets::tvhc_copper();
    q.candidate = presets::tvhc_htsc();
    q.free_parameter = FreeParameter::packing_cross_section;
    q.metric = metric;
    q.lo = 1e-8;
    q.hi = 1e-5;
    const auto r = break_even(q);
    if (metric == Metric::packing_core) {
        return {"htsc_break_even_packing",
                "HTSC cross-section at which the packing core matches copper", "m^2", 6e-7,
                r.value, "packing parity; thread parity is listed separately"};
    }
    return {"htsc_break_even_threads",
            "HTSC cross-section at which the required threads match copper", "m^2", 6e-7, r.value,
            "thread parity includes the signal speed ratio"};
}

void append_unique(std::vector<Discrepancy>& out, Discrepancy d) {
    const bool seen =
        std::any_of(out.begin(), out.end(), [&](const Discrepancy& x) { return x.id == d.id; });
    if (!seen) out.push_back(std::move(d));
}

} // namespace

std::vector<Discrepancy> full_ledger() {
    return {static_core(),
            network_processing(),
            propagation(DistanceMode::diameter),
            propagation(DistanceMode::mean_chord),
            mean_distance(),
            emitter_power(),
            htsc_driver_core(),
            htsc_thread_reduction(),
            htsc_break_even(Metric::packing_core),
            htsc_break_even(Metric::required_threads)};
}

std::vector<Discrepancy> ledger_for_sizing(const Scenario& s) {
    std::vector<Discrepancy> out;
    const auto& t = s.technology;
    if (t.medium == Medium::guided_volume && t.resistivity > 0.0) out.push_back(static_core());
    out.push_back(network_processing());
    out.push_back(propagation(DistanceMode::diameter));
    out.push_back(propagation(DistanceMode::mean_chord));
    out.push_back(mean_distance());
    if (t.name == "optical") out.push_back(emitter_power());
    if (t.name == "htsc") out.push_back(htsc_driver_core());
    return out;
}

std::vector<Discrepancy> ledger_for_comparison(std::span<const Scenario> scenarios) {
    std::vector<Discrepancy> out;
    bool has_copper = false;
    bool has_htsc = false;
    for (const auto& s : scenarios) {
        for (auto& d : ledger_for_sizing(s)) append_unique(out, std::move(d));
        has_copper = has_copper || s.technology.name == "copper";
        has_htsc = has_htsc || s.technology.name == "htsc";
    }
    if (has_copper && has_htsc) append_unique(out, htsc_thread_reduction());
    return out;
}

std::vector<Discrepancy> ledger_for_break_even(const BreakEvenQuery& q) {
    std::vector<Discrepancy> out;
    if (q.candidate.technology.name == "htsc" || q.baseline.technology.name == "htsc") {
        out.push_back(htsc_break_even(Metric::packing_core));
        out.push_back(htsc_break_even(Metric::required_threads));
    }
    return out;
}

} // namespace hypersize
