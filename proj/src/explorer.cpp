#include "hypersize/explorer.hpp"

#include <cmath>
#include <sstream>

#include "hypersize/error.hpp"

namespace hypersize {

std::string_view to_string(SweepParameter p) {
    switch (p) {
    case SweepParameter::performance: return "theta";
    case SweepParameter::clock_frequency: return "clock";
    case SweepParameter::node_count: return "nodes";
    }
    return "unknown";
}

SweepParameter parse_sweep_parameter(std::string_view text) {
    if (text == "theta" || text == "performance") return SweepParameter::performance;
    if (text == "clock" || text == "f0" || text == "clock_frequency")
        return SweepParameter::clock_frequency;
    if (text == "nodes" || text == "q" || text == "node_count") return SweepParameter::node_count;
    throw InvalidConfig("param", "expected theta, clock or nodes, got '" + std::string(text) + "'");
}

void SweepSpec::validate() const {
    if (points < 2) throw InvalidConfig("points", "must be >= 2");
    if (!(std::isfinite(min) && std::isfinite(max) && min < max))
        throw InvalidConfig("min", "sweep range needs min < max");
    if (!(min > 0.0)) throw InvalidConfig("min", "swept quantities must be > 0");
    base.validate();
}

std::vector<double> sweep_values(const SweepSpec& spec) {
    spec.validate();
    std::vector<double> values(static_cast<std::size_t>(spec.points));
    const double steps = spec.points - 1;
    for (int i = 0; i < spec.points; ++i) {
        if (spec.spacing == Spacing::log) {
            const double a = std::log10(spec.min);
            const double b = std::log10(spec.max);
            values[i] = std::pow(10.0, a + (b - a) * i / steps);
        } else {
            values[i] = spec.min + (spec.max - spec.min) * i / steps;
        }
    }
    values.front() = spec.min;
    values.back() = spec.max;
    return values;
}

namespace {

MachineConfig machine_at(const SweepSpec& spec, double value) {
    MachineConfig m = spec.base.machine;
    if (spec.pin_diameter && !m.network_diameter_override)
        m.network_diameter_override = effective_diameter(m);
    switch (spec.parameter) {
    case SweepParameter::performance:
        m.node_count = value * m.reference_word_width / (m.clock_frequency * m.word_width);
        break;
    case SweepParameter::clock_frequency: m.clock_frequency = value; break;
    case SweepParameter::node_count: m.node_count = value; break;
    }
    return m;
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    const auto values = sweep_values(spec);
    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        Scenario s = spec.base;
        try {
            s.machine = machine_at(spec, values[i]);
            rows.push_back({values[i], s.machine, evaluate(s, spec.distance)});
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "sweep point " << i << " (" << to_string(spec.parameter) << " = " << values[i]
                << "): " << e.what();
            throw EvaluationError(msg.str());
        }
    }
    return rows;
}

std::vector<TechnologyColumn> compare_technologies(const Scenario& base,
                                                   std::span<const InterconnectTech> technologies,
                                                   DistanceMode distance) {
    if (technologies.size() < 2)
        throw InvalidConfig("technologies", "comparison needs at least two technologies");

    std::vector<TechnologyColumn> columns;
    columns.reserve(technologies.size());
    for (const auto& tech : technologies) {
        TechnologyColumn col;
        col.technology = tech.name;
        Scenario s = base;
        s.technology = tech;
        try {
            col.eval = evaluate(s, distance);
        } catch (const std::exception& e) {
            col.error = e.what();
        }
        columns.push_back(std::move(col));
    }

    if (const auto& ref = columns.front().eval) {
        for (auto& col : columns) {
            if (!col.eval) continue;
            const auto& a = ref->sizing;
            const auto& b = col.eval->sizing;
            col.ratios = TechnologyRatios{
                b.wire_count / a.wire_count,
                b.driver_core / a.driver_core,
                b.packing_core / a.packing_core,
                b.installation / a.installation,
                col.eval->threads / ref->threads,
            };
        }
    }
    return columns;
}

std::string_view to_string(FreeParameter p) {
    switch (p) {
    case FreeParameter::packing_cross_section: return "sigma";
    case FreeParameter::emitter_footprint: return "sigma_le";
    case FreeParameter::link_bandwidth: return "bandwidth";
    case FreeParameter::signal_speed: return "signal_speed";
    case FreeParameter::per_driver_power: return "driver_power";
    }
    return "unknown";
}

std::string_view to_string(Metric m) {
    switch (m) {
    case Metric::packing_core: return "packing";
    case Metric::installation_diameter: return "installation";
    case Metric::required_threads: return "threads";
    }
    return "unknown";
}

FreeParameter parse_free_parameter(std::string_view text) {
    if (text == "sigma" || text == "packing_cross_section")
        return FreeParameter::packing_cross_section;
    if (text == "sigma_le" || text == "emitter_footprint") return FreeParameter::emitter_footprint;
    if (text == "bandwidth" || text == "link_bandwidth") return FreeParameter::link_bandwidth;
    if (text == "signal_speed") return FreeParameter::signal_speed;
    if (text == "driver_power" || text == "per_driver_power")
        return FreeParameter::per_driver_power;
    throw InvalidConfig("free", "unknown free parameter '" + std::string(text) + "'");
}

Metric parse_metric(std::string_view text) {
    if (text == "packing" || text == "packing_core") return Metric::packing_core;
    if (text == "installation" || text == "installation_diameter")
        return Metric::installation_diameter;
    if (text == "threads" || text == "required_threads") return Metric::required_threads;
    throw InvalidConfig("metric", "unknown metric '" + std::string(text) + "'");
}

double metric_value(const Scenario& s, Metric metric) {
    const Evaluation e = evaluate(s);
    switch (metric) {
    case Metric::packing_core: return e.sizing.packing_core;
    case Metric::installation_diameter: return e.sizing.installation;
    case Metric::required_threads: return e.threads;
    }
    return 0.0;
}

Scenario with_parameter(Scenario s, FreeParameter p, double value) {
    auto& t = s.technology;
    switch (p) {
    case FreeParameter::packing_cross_section: t.packing_cross_section = value; break;
    case FreeParameter::emitter_footprint: t.emitter_footprint = value; break;
    case FreeParameter::link_bandwidth: t.link_bandwidth = value; break;
    case FreeParameter::signal_speed: t.signal_speed = value; break;
    case FreeParameter::per_driver_power:
        if (t.driver.form != DriverForm::fixed_power)
            throw InvalidConfig("technology.driver.per_driver_power",
                                "free driver power needs a fixed-power driver");
        t.driver.fixed_power = value;
        break;
    }
    return s;
}

BreakEvenResult break_even(const BreakEvenQuery& q) {
    if (!(std::isfinite(q.lo) && std::isfinite(q.hi) && q.lo < q.hi))
        throw InvalidConfig("lo", "search interval needs lo < hi");

    const double target = metric_value(q.baseline, q.metric);
    auto excess = [&](double x) {
        return metric_value(with_parameter(q.candidate, q.free_parameter, x), q.metric) - target;
    };

    double lo = q.lo;
    double hi = q.hi;
    double f_lo = excess(lo);
    double f_hi = excess(hi);
    if (f_lo == 0.0) return {lo, target, target, 0};
    if (f_hi == 0.0) return {hi, target, target, 0};
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        std::ostringstream msg;
        msg << "no crossing in [" << q.lo << ", " << q.hi << "]: candidate " << to_string(q.metric)
            << " is " << f_lo + target << " at lo and " << f_hi + target
            << " at hi, baseline is " << target;
        throw NoCrossing(msg.str(), f_lo + target, f_hi + target, target);
    }

    int iterations = 0;
    while (hi - lo > kBreakEvenRelativeTolerance * 0.5 * (std::abs(lo) + std::abs(hi)) &&
           iterations < 200) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = excess(mid);
        ++iterations;
        if (f_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    const double value = 0.5 * (lo + hi);
    return {value, target, excess(value) + target, iterations};
}

} // namespace hypersize
