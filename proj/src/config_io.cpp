#include "hypersize/config_io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hypersize/error.hpp"

namespace hypersize {

namespace {

using nlohmann::json;

// Reads keys out of one JSON object and rejects whatever is left over.
class Section {
public:
    Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw InvalidConfig(path_.empty() ? "config" : path_, "must be an object");
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    double number(const std::string& key, double fallback) {
        return has(key) ? number(key) : fallback;
    }

    double number(const std::string& key) {
        const json& v = at(key);
        if (!v.is_number()) throw InvalidConfig(field(key), "must be a number");
        return v.get<double>();
    }

    std::uint64_t unsigned_integer(const std::string& key) {
        const json& v = at(key);
        if (!v.is_number_unsigned()) throw InvalidConfig(field(key), "must be a non-negative integer");
        return v.get<std::uint64_t>();
    }

    std::int64_t integer(const std::string& key) {
        const json& v = at(key);
        if (v.is_number_integer()) return v.get<std::int64_t>();
        if (v.is_number_float()) {
            const double d = v.get<double>();
            if (d == std::floor(d) && std::abs(d) < 9e15) return static_cast<std::int64_t>(d);
        }
        throw InvalidConfig(field(key), "must be an integer");
    }

    std::string string(const std::string& key) {
        const json& v = at(key);
        if (!v.is_string()) throw InvalidConfig(field(key), "must be a string");
        return v.get<std::string>();
    }

    Section object(const std::string& key) { return Section(at(key), field(key)); }

    const json& raw(const std::string& key) { return at(key); }

    std::string field(const std::string& key) const {
        return path_.empty() ? key : path_ + "." + key;
    }

    void reject_unknown() const {
        for (const auto& [key, value] : j_.items()) {
            if (!used_.count(key)) throw InvalidConfig(field(key), "unknown key");
        }
    }

private:
    const json& at(const std::string& key) {
        if (!has(key)) throw InvalidConfig(field(key), "missing required key");
        used_.insert(key);
        return j_.at(key);
    }

    const json& j_;
    std::string path_;
    std::set<std::string> used_;
};

MachineConfig parse_machine(Section s) {
    MachineConfig m;
    m.node_count = s.number("node_count");
    m.clock_frequency = s.number("clock_frequency");
    m.word_width = s.number("word_width");
    m.reference_word_width = s.number("reference_word_width");
    m.hop_processing_cycles = s.number("hop_processing_cycles", 10.0);
    m.memory_response_time = s.number("memory_response_time");
    if (s.has("network_diameter_override"))
        m.network_diameter_override = s.number("network_diameter_override");
    s.reject_unknown();
    return m;
}

TrafficModel parse_traffic(Section s, Variant variant) {
    TrafficModel t = TrafficModel::for_variant(variant);
    t.load_rate = s.number("load_rate", t.load_rate);
    t.store_rate = s.number("store_rate", t.store_rate);
    t.saturation_load = s.number("saturation_load", t.saturation_load);
    t.traffic_factor = s.number("traffic_factor", t.traffic_factor);
    s.reject_unknown();
    return t;
}

CoolingModel parse_cooling(Section s) {
    CoolingModel c;
    c.surface_power_density = s.number("surface_power_density", c.surface_power_density);
    c.vertical_pitch = s.number("vertical_pitch", c.vertical_pitch);
    s.reject_unknown();
    return c;
}

EnergyModel parse_energy(Section s) {
    EnergyModel e;
    e.energy_per_op = s.number("energy_per_op", e.energy_per_op);
    s.reject_unknown();
    return e;
}

DriverModel parse_driver(Section s) {
    const std::string form = s.string("form");
    DriverModel d;
    if (form == "current_voltage") {
        d = DriverModel::from_current_voltage(s.number("signal_current"), s.number("drive_voltage"));
    } else if (form == "fixed_power") {
        d = DriverModel::from_power(s.number("per_driver_power"));
    } else {
        throw InvalidConfig(s.field("form"), "expected current_voltage or fixed_power");
    }
    s.reject_unknown();
    return d;
}

InterconnectTech parse_technology(Section s) {
    InterconnectTech t;
    t.name = s.string("name");
    const std::string medium = s.string("medium");
    if (medium == "guided_volume") {
        t.medium = Medium::guided_volume;
    } else if (medium == "open_space") {
        t.medium = Medium::open_space;
    } else {
        throw InvalidConfig(s.field("medium"), "expected guided_volume or open_space");
    }
    t.link_bandwidth = s.number("link_bandwidth");
    t.signal_speed = s.number("signal_speed");
    if (t.medium == Medium::guided_volume) {
        t.resistivity = s.number("resistivity");
        t.electrical_cross_section = s.number("electrical_cross_section");
        t.packing_cross_section = s.number("packing_cross_section");
    } else {
        t.emitter_footprint = s.number("emitter_footprint");
    }
    t.driver = parse_driver(s.object("driver"));
    s.reject_unknown();
    return t;
}

SimConfig parse_simulation(Section s) {
    SimConfig c;
    c.thread_contexts = s.integer("thread_contexts");
    c.round_trip_cycles = s.number("round_trip_cycles");
    c.latency_jitter = s.number("latency_jitter", c.latency_jitter);
    c.memory_op_probability = s.number("memory_op_probability", c.memory_op_probability);
    if (s.has("warmup_cycles")) c.warmup_cycles = s.integer("warmup_cycles");
    if (s.has("measured_cycles")) c.measured_cycles = s.integer("measured_cycles");
    if (s.has("seed")) c.seed = s.unsigned_integer("seed");
    s.reject_unknown();
    return c;
}

void check_notes(const json& notes) {
    if (!notes.is_object()) throw InvalidConfig("notes", "must be an object of strings");
    for (const auto& [key, value] : notes.items()) {
        if (!value.is_string()) throw InvalidConfig("notes." + key, "must be a string");
    }
}

} // namespace

Scenario parse_scenario(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InvalidConfig("config", std::string("malformed JSON: ") + e.what());
    }

    Section root(doc, "");
    Scenario s;
    s.name = root.has("name") ? root.string("name") : std::string();
    s.variant = root.has("variant") ? parse_variant(root.string("variant"))
                                    : Variant::paper_simplified;
    if (root.has("notes")) check_notes(root.raw("notes"));

    s.machine = parse_machine(root.object("machine"));
    s.traffic = root.has("traffic") ? parse_traffic(root.object("traffic"), s.variant)
                                    : TrafficModel::for_variant(s.variant);
    if (root.has("cooling")) s.cooling = parse_cooling(root.object("cooling"));
    if (root.has("energy")) s.energy = parse_energy(root.object("energy"));
    s.technology = parse_technology(root.object("technology"));
    if (root.has("simulation")) s.simulation = parse_simulation(root.object("simulation"));
    root.reject_unknown();

    s.validate();
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidConfig("config", "cannot read '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str());
}

} // namespace hypersize
