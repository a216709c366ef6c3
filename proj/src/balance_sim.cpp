#include "hypersize/balance_sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>

#include "hypersize/error.hpp"

namespace hypersize {

std::int64_t SimConfig::effective_warmup() const {
    if (warmup_cycles) return *warmup_cycles;
    return static_cast<std::int64_t>(std::llround(10.0 * round_trip_cycles));
}

void SimConfig::validate() const {
    if (thread_contexts < 1) throw InvalidConfig("simulation.thread_contexts", "must be >= 1");
    if (!(round_trip_cycles >= 1.0) || !std::isfinite(round_trip_cycles))
        throw InvalidConfig("simulation.round_trip_cycles", "must be >= 1");
    if (!(latency_jitter >= 0.0 && latency_jitter < 1.0))
        throw InvalidConfig("simulation.latency_jitter", "must be in [0, 1)");
    if (!(memory_op_probability >= 0.0 && memory_op_probability <= 1.0))
        throw InvalidConfig("simulation.memory_op_probability", "must be in [0, 1]");
    if (warmup_cycles && *warmup_cycles < 0)
        throw InvalidConfig("simulation.warmup_cycles", "must be >= 0");
    if (measured_cycles < 1) throw InvalidConfig("simulation.measured_cycles", "must be >= 1");
}

SimResult run_simulation(const SimConfig& sim) {
    sim.validate();

    const std::int64_t T = sim.thread_contexts;
    const std::int64_t warmup = sim.effective_warmup();
    const std::int64_t end = warmup + sim.measured_cycles;

    const double lo_bound = sim.round_trip_cycles * (1.0 - sim.latency_jitter);
    const double hi_bound = sim.round_trip_cycles * (1.0 + sim.latency_jitter);
    const auto lat_lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(lo_bound)));
    const auto lat_hi = std::max(lat_lo, static_cast<std::int64_t>(std::floor(hi_bound)));

    std::mt19937_64 rng(sim.seed);
    std::uniform_int_distribution<std::int64_t> latency(lat_lo, lat_hi);
    std::bernoulli_distribution is_memory(sim.memory_op_probability);

    std::set<std::int64_t> ready;
    for (std::int64_t i = 0; i < T; ++i) ready.insert(ready.end(), i);
    using Wakeup = std::pair<std::int64_t, std::int64_t>;  // (ready cycle, thread)
    std::priority_queue<Wakeup, std::vector<Wakeup>, std::greater<>> blocked;

    SimResult out;
    out.measured_cycles = sim.measured_cycles;
    out.per_thread_issue.assign(static_cast<std::size_t>(T), 0);

    std::int64_t cycle = 0;
    while (cycle < end) {
        while (!blocked.empty() && blocked.top().first <= cycle) {
            ready.insert(blocked.top().second);
            blocked.pop();
        }
        if (ready.empty()) {
            // Stall until the next reply arrives.
            cycle = std::min(end, blocked.top().first);
            continue;
        }
        auto it = ready.lower_bound(cycle % T);
        if (it == ready.end()) it = ready.begin();
        const std::int64_t thread = *it;

        if (cycle >= warmup) {
            ++out.issued_ops;
            ++out.per_thread_issue[static_cast<std::size_t>(thread)];
        }
        if (is_memory(rng)) {
            ready.erase(it);
            blocked.emplace(cycle + 1 + latency(rng), thread);
        }
        ++cycle;
    }
    out.utilization =
        static_cast<double>(out.issued_ops) / static_cast<double>(sim.measured_cycles);
    return out;
}

std::vector<CurvePoint> utilization_curve(const SimConfig& base,
                                          std::span<const std::int64_t> thread_range) {
    if (thread_range.empty()) throw InvalidConfig("threads_range", "must not be empty");
    for (std::size_t i = 1; i < thread_range.size(); ++i) {
        if (thread_range[i] <= thread_range[i - 1])
            throw InvalidConfig("threads_range", "must be strictly increasing");
    }
    if (thread_range.front() < 1) throw InvalidConfig("threads_range", "must start at >= 1");
    base.validate();

    std::vector<CurvePoint> curve(thread_range.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < thread_range.size(); i = next++) {
            SimConfig cfg = base;
            cfg.thread_contexts = thread_range[i];
            cfg.seed = base.seed + i;
            curve[i] = {thread_range[i], run_simulation(cfg).utilization};
        }
    };
    const auto workers = std::min<std::size_t>(
        thread_range.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    pool.clear();
    return curve;
}

std::int64_t find_knee(std::span<const CurvePoint> curve) {
    if (curve.empty()) throw EvaluationError("find_knee: empty utilization curve");
    double peak = 0.0;
    for (const auto& p : curve) peak = std::max(peak, p.utilization);
    const double threshold = kKneeFraction * peak;
    std::int64_t knee = curve.front().threads;
    bool found = false;
    for (const auto& p : curve) {
        if (p.utilization >= threshold && (!found || p.threads < knee)) {
            knee = p.threads;
            found = true;
        }
    }
    return knee;
}

} // namespace hypersize
