#include "hypersize/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace hypersize {

Record& Record::add(std::string key, double value) {
    entries_.push_back({std::move(key), value});
    return *this;
}

Record& Record::add(std::string key, std::int64_t value) {
    entries_.push_back({std::move(key), value});
    return *this;
}

Record& Record::add(std::string key, std::string value) {
    entries_.push_back({std::move(key), std::move(value)});
    return *this;
}

Record& Record::add(std::string key, Record value) {
    entries_.push_back({std::move(key), std::move(value)});
    return *this;
}

Record& Record::add(std::string key, std::vector<Record> value) {
    entries_.push_back({std::move(key), std::move(value)});
    return *this;
}

Record& Record::append(Entry entry) {
    entries_.push_back(std::move(entry));
    return *this;
}

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5e", value);
    return buf;
}

namespace {

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

void write_json(std::ostringstream& out, const Record& r, int depth);

void write_json_array(std::ostringstream& out, std::span<const Record> records, int depth) {
    if (records.empty()) {
        out << "[]";
        return;
    }
    const std::string pad(2 * (depth + 1), ' ');
    out << "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        out << pad;
        write_json(out, records[i], depth + 1);
        out << (i + 1 < records.size() ? ",\n" : "\n");
    }
    out << std::string(2 * depth, ' ') << ']';
}

void write_json(std::ostringstream& out, const Record& r, int depth) {
    const std::string pad(2 * (depth + 1), ' ');
    out << "{\n";
    const auto& entries = r.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        out << pad << json_string(entries[i].key) << ": ";
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, double>) {
                    out << (std::isfinite(v) ? format_number(v) : "null");
                } else if constexpr (std::is_same_v<T, std::int64_t>) {
                    out << v;
                } else if constexpr (std::is_same_v<T, std::string>) {
                    out << json_string(v);
                } else if constexpr (std::is_same_v<T, Record>) {
                    write_json(out, v, depth + 1);
                } else {
                    write_json_array(out, v, depth + 1);
                }
            },
            entries[i].value);
        out << (i + 1 < entries.size() ? ",\n" : "\n");
    }
    out << std::string(2 * depth, ' ') << '}';
}

void flatten(const Record& r, std::vector<std::string>& keys, std::vector<std::string>& cells) {
    for (const auto& e : r.entries()) {
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, Record>) {
                    flatten(v, keys, cells);
                } else if constexpr (std::is_same_v<T, std::vector<Record>>) {
                    // arrays have no CSV form
                } else {
                    keys.push_back(e.key);
                    if constexpr (std::is_same_v<T, double>) {
                        cells.push_back(format_number(v));
                    } else if constexpr (std::is_same_v<T, std::int64_t>) {
                        cells.push_back(std::to_string(v));
                    } else {
                        cells.push_back(v);
                    }
                }
            },
            e.value);
    }
}

void write_csv_line(std::ostringstream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << csv_escape(cells[i]);
    }
    out << '\n';
}

} // namespace

std::string to_json(const Record& record) {
    std::ostringstream out;
    write_json(out, record, 0);
    out << '\n';
    return out.str();
}

std::string to_json(std::span<const Record> records) {
    std::ostringstream out;
    write_json_array(out, records, 0);
    out << '\n';
    return out.str();
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string to_csv(std::span<const Record> records) {
    std::ostringstream out;
    for (std::size_t i = 0; i < records.size(); ++i) {
        std::vector<std::string> keys;
        std::vector<std::string> cells;
        flatten(records[i], keys, cells);
        if (i == 0) write_csv_line(out, keys);
        write_csv_line(out, cells);
    }
    return out.str();
}

Record sizing_record(const std::string& name, const Evaluation& e) {
    const auto& s = e.sizing;
    Record latency;
    latency.add("distance_mode", std::string(to_string(e.latency.mode)))
        .add("tau_p_s", e.latency.propagation)
        .add("tau_n_s", e.latency.network_processing)
        .add("tau_m_s", e.latency.memory)
        .add("total_s", e.latency.total)
        .add("latency_threads", e.latency.threads);

    Record r;
    r.add("name", name)
        .add("n_wires", s.wire_count)
        .add("theta_ops", s.performance)
        .add("l_static_m", s.static_core)
        .add("l_dynamic_m", s.dynamic_core)
        .add("l_driver_m", s.driver_core)
        .add("l_power_m", s.power_core)
        .add("l_packing_m", s.packing_core)
        .add("l_installation_m", s.installation)
        .add("binding", std::string(to_string(s.binding)))
        .add("variant", std::string(to_string(s.variant)))
        .add("diameter_hops", s.diameter_hops)
        .add("threads", e.threads)
        .add("threads_ceil", static_cast<std::int64_t>(std::ceil(e.threads)))
        .add("latency", std::move(latency));
    return r;
}

Record discrepancy_record(const Discrepancy& d) {
    Record r;
    r.add("id", d.id)
        .add("quantity", d.quantity)
        .add("unit", d.unit)
        .add("published_value", d.published_value)
        .add("formula_value", d.formula_value)
        .add("note", d.note);
    return r;
}

std::vector<Record> discrepancy_records(std::span<const Discrepancy> ledger) {
    std::vector<Record> out;
    out.reserve(ledger.size());
    for (const auto& d : ledger) out.push_back(discrepancy_record(d));
    return out;
}

Record sweep_record(SweepParameter parameter, const SweepRow& row) {
    Record r;
    r.add(std::string(to_string(parameter)), row.value)
        .add("node_count", row.machine.node_count)
        .add("clock_hz", row.machine.clock_frequency);
    const Record sizing = sizing_record("", row.eval);
    for (const auto& e : sizing.entries()) {
        if (e.key == "name" || e.key == "latency") continue;
        r.append(e);
    }
    return r;
}

Record comparison_record(const TechnologyColumn& col) {
    Record r;
    r.add("technology", col.technology).add("status", col.eval ? "ok" : "failed");
    auto num = [](const std::optional<double>& v) {
        return v ? *v : std::numeric_limits<double>::quiet_NaN();
    };
    const auto* s = col.eval ? &col.eval->sizing : nullptr;
    r.add("n_wires", num(s ? std::optional(s->wire_count) : std::nullopt))
        .add("l_static_m", num(s ? std::optional(s->static_core) : std::nullopt))
        .add("l_dynamic_m", num(s ? std::optional(s->dynamic_core) : std::nullopt))
        .add("l_driver_m", num(s ? std::optional(s->driver_core) : std::nullopt))
        .add("l_packing_m", num(s ? std::optional(s->packing_core) : std::nullopt))
        .add("l_installation_m", num(s ? std::optional(s->installation) : std::nullopt))
        .add("binding", s ? std::string(to_string(s->binding)) : std::string())
        .add("threads", num(col.eval ? std::optional(col.eval->threads) : std::nullopt));
    const auto& q = col.ratios;
    r.add("ratio_n_wires", num(q ? std::optional(q->wire_count) : std::nullopt))
        .add("ratio_driver", num(q ? std::optional(q->driver_core) : std::nullopt))
        .add("ratio_packing", num(q ? std::optional(q->packing_core) : std::nullopt))
        .add("ratio_installation", num(q ? std::optional(q->installation) : std::nullopt))
        .add("ratio_threads", num(q ? std::optional(q->threads) : std::nullopt))
        .add("error", col.error);
    return r;
}

Record break_even_record(const BreakEvenQuery& q, const BreakEvenResult& res) {
    Record r;
    r.add("baseline", q.baseline.name)
        .add("candidate", q.candidate.name)
        .add("metric", std::string(to_string(q.metric)))
        .add("free", std::string(to_string(q.free_parameter)))
        .add("value", res.value)
        .add("baseline_metric", res.baseline_metric)
        .add("candidate_metric", res.candidate_metric)
        .add("iterations", static_cast<std::int64_t>(res.iterations));
    return r;
}

Record curve_record(const CurvePoint& p) {
    Record r;
    r.add("threads", static_cast<std::int64_t>(p.threads)).add("utilization", p.utilization);
    return r;
}

} // namespace hypersize
