#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hypersize {

// One multithreaded PE hiding memory latency behind T hardware contexts.
struct SimConfig {
    std::int64_t thread_contexts = 1;
    double round_trip_cycles = 100.0;     // mean latency l
    double latency_jitter = 0.0;          // uniform +/- jitter * l
    double memory_op_probability = 1.0;
    std::optional<std::int64_t> warmup_cycles;  // defaults to 10 * l
    std::int64_t measured_cycles = 100000;
    std::uint64_t seed = 1;

    std::int64_t effective_warmup() const;
    void validate() const;
};

struct SimResult {
    std::int64_t issued_ops = 0;
    std::int64_t measured_cycles = 0;
    double utilization = 0.0;
    std::vector<std::int64_t> per_thread_issue;
};

struct CurvePoint {
    std::int64_t threads;
    double utilization;
};

// Each cycle the scan for a ready context starts at (cycle mod T) and wraps.
// The chosen context issues one op; a memory op blocks it for a latency drawn
// uniformly from [ceil(l(1-j)), floor(l(1+j))].
SimResult run_simulation(const SimConfig& sim);

// Run i uses seed base.seed + i. Results are in input order.
std::vector<CurvePoint> utilization_curve(const SimConfig& base,
                                          std::span<const std::int64_t> thread_range);

inline constexpr double kKneeFraction = 0.95;

// Smallest T reaching kKneeFraction of the curve's maximum utilization.
std::int64_t find_knee(std::span<const CurvePoint> curve);

} // namespace hypersize
