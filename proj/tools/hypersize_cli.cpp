// hypersize: size petaops-class machines from physical limits and check the
// latency-hiding balance condition with a cycle-level simulator.
//
// Standard output carries data only; diagnostics go to stderr.
// Exit codes: 0 ok, 1 evaluation error, 2 usage or configuration error.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypersize/balance_sim.hpp"
#include "hypersize/config_io.hpp"
#include "hypersize/discrepancy.hpp"
#include "hypersize/error.hpp"
#include "hypersize/explorer.hpp"
#include "hypersize/report_io.hpp"

using namespace hypersize;

namespace {

struct OutputOptions {
    std::string format;
    bool no_ledger = false;
};

struct ModelOptions {
    std::string variant;
    std::string distance = "diameter";
};

void add_model_options(CLI::App* cmd, ModelOptions& m) {
    cmd->add_option("--variant", m.variant,
                    "Formula variant: paper_simplified (default) or exact; overrides the file")
        ->check(CLI::IsMember({"paper_simplified", "paper-simplified", "simplified", "exact"}));
    cmd->add_option("--distance", m.distance,
                    "Length entering the propagation latency: diameter or mean-chord")
        ->check(CLI::IsMember({"diameter", "mean-chord", "mean_chord"}));
}

void add_output_options(CLI::App* cmd, OutputOptions& o, const std::string& default_format) {
    o.format = default_format;
    cmd->add_option("--format", o.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--no-ledger", o.no_ledger,
                  "Omit the table of published figures the formulas do not reproduce");
}

Scenario load(const std::string& path, const ModelOptions& m) {
    Scenario s = load_scenario(path);
    if (!m.variant.empty()) s = with_variant(std::move(s), parse_variant(m.variant));
    return s;
}

// Tables: CSV, then one blank line and the ledger CSV; or a JSON object with
// "rows" and "discrepancies".
void emit_table(const std::vector<Record>& rows, const std::vector<Discrepancy>& ledger,
                const OutputOptions& o) {
    const auto ledger_rows = discrepancy_records(ledger);
    const bool with_ledger = !o.no_ledger && !ledger_rows.empty();
    if (o.format == "csv") {
        std::cout << to_csv(rows);
        if (with_ledger) std::cout << '\n' << to_csv(ledger_rows);
        return;
    }
    if (!with_ledger) {
        std::cout << to_json(rows);
        return;
    }
    Record doc;
    doc.add("rows", rows).add("discrepancies", ledger_rows);
    std::cout << to_json(doc);
}

std::vector<std::int64_t> parse_thread_range(const std::string& spec) {
    std::vector<std::int64_t> parts;
    std::size_t start = 0;
    while (start <= spec.size()) {
        const auto colon = spec.find(':', start);
        const std::string token =
            spec.substr(start, colon == std::string::npos ? std::string::npos : colon - start);
        try {
            std::size_t used = 0;
            parts.push_back(std::stoll(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw InvalidConfig("threads-range", "expected lo:hi[:step] integers, got '" + spec + "'");
        }
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (parts.size() < 2 || parts.size() > 3)
        throw InvalidConfig("threads-range", "expected lo:hi[:step], got '" + spec + "'");
    const std::int64_t lo = parts[0];
    const std::int64_t hi = parts[1];
    const std::int64_t step = parts.size() == 3 ? parts[2] : 1;
    if (lo < 1 || hi < lo || step < 1)
        throw InvalidConfig("threads-range", "needs 1 <= lo <= hi and step >= 1");
    std::vector<std::int64_t> range;
    for (std::int64_t t = lo; t <= hi; t += step) range.push_back(t);
    return range;
}

int run(int argc, char** argv) {
    CLI::App app{"Parametric sizing of petaops-scale machines.\n"
                 "Config files are JSON in SI units: Hz, bits, m, m^2, W, A, V, J/op, s, "
                 "bit/s, m/s, Ohm*m."};
    app.require_subcommand(1);

    // size
    std::string size_config;
    ModelOptions size_model;
    OutputOptions size_out;
    auto* size = app.add_subcommand("size", "Size one configuration: diameters [m], wires, "
                                            "performance [ops/s], latency [s], threads");
    size->add_option("config", size_config, "JSON config file")->required();
    add_model_options(size, size_model);
    add_output_options(size, size_out, "json");

    // sweep
    std::string sweep_config;
    ModelOptions sweep_model;
    OutputOptions sweep_out;
    std::string sweep_param;
    double sweep_min = 0.0;
    double sweep_max = 0.0;
    int sweep_points = 0;
    bool sweep_log = false;
    bool sweep_pin = false;
    auto* sweep = app.add_subcommand("sweep", "Sweep one parameter and tabulate the sizing");
    sweep->add_option("config", sweep_config, "JSON config file")->required();
    sweep->add_option("--param", sweep_param,
                      "theta [ops/s] (adjusts Q), clock [Hz] or nodes [count]")
        ->required();
    sweep->add_option("--min", sweep_min, "Lower end of the range")->required();
    sweep->add_option("--max", sweep_max, "Upper end of the range")->required();
    sweep->add_option("--points", sweep_points, "Number of points (>= 2)")->required();
    sweep->add_flag("--log", sweep_log, "Logarithmic spacing");
    sweep->add_flag("--pin-diameter", sweep_pin,
                    "Hold the network diameter D [hops] at the base value");
    add_model_options(sweep, sweep_model);
    add_output_options(sweep, sweep_out, "csv");

    // compare
    std::vector<std::string> compare_configs;
    ModelOptions compare_model;
    OutputOptions compare_out;
    auto* compare = app.add_subcommand(
        "compare", "Compare technologies on the first file's machine; ratios vs the first");
    compare->add_option("configs", compare_configs, "Two or more JSON config files")
        ->required()
        ->expected(2, -1);
    add_model_options(compare, compare_model);
    add_output_options(compare, compare_out, "csv");

    // breakeven
    std::string be_baseline;
    std::string be_candidate;
    std::string be_metric = "packing";
    std::string be_free = "sigma";
    double be_lo = 0.0;
    double be_hi = 0.0;
    ModelOptions be_model;
    OutputOptions be_out;
    auto* be = app.add_subcommand(
        "breakeven", "Solve a candidate parameter for metric parity with a baseline");
    be->add_option("baseline", be_baseline, "Baseline JSON config")->required();
    be->add_option("candidate", be_candidate, "Candidate JSON config")->required();
    be->add_option("--metric", be_metric,
                   "packing [m], installation [m] or threads [count]");
    be->add_option("--free", be_free,
                   "Candidate parameter: sigma [m^2], sigma_le [m^2], bandwidth [bit/s], "
                   "signal_speed [m/s], driver_power [W]");
    be->add_option("--lo", be_lo, "Search interval lower end")->required();
    be->add_option("--hi", be_hi, "Search interval upper end")->required();
    add_model_options(be, be_model);
    add_output_options(be, be_out, "json");

    // simulate
    std::string sim_config;
    std::string sim_range;
    std::optional<double> sim_latency;
    std::optional<double> sim_jitter;
    std::optional<double> sim_probability;
    std::optional<std::uint64_t> sim_seed;
    std::optional<std::int64_t> sim_measured;
    std::optional<std::int64_t> sim_warmup;
    OutputOptions sim_out;
    auto* simulate = app.add_subcommand(
        "simulate", "Utilization vs thread contexts for one PE, plus the knee");
    simulate->add_option("config", sim_config, "Optional JSON config with a simulation section");
    simulate->add_option("--threads-range", sim_range, "lo:hi[:step] thread contexts")
        ->required();
    simulate->add_option("--latency", sim_latency, "Mean round-trip latency [cycles]");
    simulate->add_option("--jitter", sim_jitter, "Uniform latency jitter as a fraction of latency");
    simulate->add_option("--probability", sim_probability,
                         "Probability that an issued op is a memory access");
    simulate->add_option("--seed", sim_seed, "RNG seed; run i uses seed + i");
    simulate->add_option("--measured", sim_measured,
                         "Measured cycles [default 100 * (1 + latency)]");
    simulate->add_option("--warmup", sim_warmup, "Warm-up cycles [default 10 * latency]");
    sim_out.format = "csv";
    simulate->add_option("--format", sim_out.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ledger
    OutputOptions ledger_out;
    auto* ledger = app.add_subcommand(
        "ledger", "List published figures that the formulas do not reproduce");
    ledger_out.format = "json";
    ledger->add_option("--format", ledger_out.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*size) {
        const Scenario s = load(size_config, size_model);
        const Evaluation e = evaluate(s, parse_distance_mode(size_model.distance));
        Record rec = sizing_record(s.name, e);
        const auto ledger_entries = ledger_for_sizing(s);
        if (size_out.format == "csv") {
            emit_table({rec}, ledger_entries, size_out);
        } else {
            if (!size_out.no_ledger) rec.add("discrepancies", discrepancy_records(ledger_entries));
            std::cout << to_json(rec);
        }
    } else if (*sweep) {
        SweepSpec spec;
        spec.base = load(sweep_config, sweep_model);
        spec.parameter = parse_sweep_parameter(sweep_param);
        spec.min = sweep_min;
        spec.max = sweep_max;
        spec.points = sweep_points;
        spec.spacing = sweep_log ? Spacing::log : Spacing::linear;
        spec.pin_diameter = sweep_pin;
        spec.distance = parse_distance_mode(sweep_model.distance);
        spec.validate();
        std::vector<Record> rows;
        for (const auto& row : run_sweep(spec)) rows.push_back(sweep_record(spec.parameter, row));
        emit_table(rows, ledger_for_sizing(spec.base), sweep_out);
    } else if (*compare) {
        std::vector<Scenario> scenarios;
        std::vector<InterconnectTech> techs;
        for (const auto& path : compare_configs) {
            scenarios.push_back(load(path, compare_model));
            techs.push_back(scenarios.back().technology);
        }
        std::vector<Record> rows;
        for (const auto& col : compare_technologies(scenarios.front(), techs,
                                                    parse_distance_mode(compare_model.distance)))
            rows.push_back(comparison_record(col));
        emit_table(rows, ledger_for_comparison(scenarios), compare_out);
    } else if (*be) {
        BreakEvenQuery q;
        q.baseline = load(be_baseline, be_model);
        q.candidate = load(be_candidate, be_model);
        q.metric = parse_metric(be_metric);
        q.free_parameter = parse_free_parameter(be_free);
        q.lo = be_lo;
        q.hi = be_hi;
        const auto result = break_even(q);
        emit_table({break_even_record(q, result)}, ledger_for_break_even(q), be_out);
    } else if (*simulate) {
        SimConfig base;
        if (!sim_config.empty()) {
            const Scenario s = load_scenario(sim_config);
            if (s.simulation) base = *s.simulation;
        }
        if (sim_latency) base.round_trip_cycles = *sim_latency;
        if (sim_jitter) base.latency_jitter = *sim_jitter;
        if (sim_probability) base.memory_op_probability = *sim_probability;
        if (sim_seed) base.seed = *sim_seed;
        if (sim_warmup) base.warmup_cycles = *sim_warmup;
        if (sim_measured) {
            base.measured_cycles = *sim_measured;
        } else if (sim_latency) {
            base.measured_cycles =
                static_cast<std::int64_t>(std::llround(100.0 * (1.0 + base.round_trip_cycles)));
        }
        const auto range = parse_thread_range(sim_range);
        base.thread_contexts = range.front();
        base.validate();
        const auto curve = utilization_curve(base, range);
        const auto knee = find_knee(curve);

        std::vector<Record> rows;
        double peak = 0.0;
        for (const auto& p : curve) {
            rows.push_back(curve_record(p));
            peak = std::max(peak, p.utilization);
        }
        Record knee_rec;
        knee_rec.add("knee_threads", static_cast<std::int64_t>(knee))
            .add("max_utilization", peak)
            .add("latency_cycles", base.round_trip_cycles);
        if (sim_out.format == "csv") {
            std::cout << to_csv(rows) << '\n' << to_csv(std::vector<Record>{knee_rec});
        } else {
            Record doc;
            doc.add("curve", rows).add("knee", knee_rec);
            std::cout << to_json(doc);
        }
    } else if (*ledger) {
        const auto rows = discrepancy_records(full_ledger());
        std::cout << (ledger_out.format == "csv" ? to_csv(rows) : to_json(rows));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InvalidConfig& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
