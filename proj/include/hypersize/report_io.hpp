#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hypersize/balance_sim.hpp"
#include "hypersize/discrepancy.hpp"
#include "hypersize/explorer.hpp"
#include "hypersize/scenario.hpp"

namespace hypersize {

// Ordered key/value record that serializes to a JSON object or a CSV row.
// Reals always print as 6 significant digits in lowercase scientific form so
// repeated runs are byte-identical.
class Record {
public:
    struct Entry;

    Record& add(std::string key, double value);
    Record& add(std::string key, std::int64_t value);
    Record& add(std::string key, std::string value);
    Record& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }
    Record& add(std::string key, Record value);
    Record& add(std::string key, std::vector<Record> value);
    Record& append(Entry entry);

    const std::vector<Entry>& entries() const { return entries_; }

private:
    std::vector<Entry> entries_;
};

struct Record::Entry {
    std::string key;
    std::variant<double, std::int64_t, std::string, Record, std::vector<Record>> value;
};

std::string format_number(double value);

std::string to_json(const Record& record);
std::string to_json(std::span<const Record> records);

// Header from the first record's scalar fields (nested records are flattened
// in place, arrays are dropped), then one row per record.
std::string to_csv(std::span<const Record> records);

std::string csv_escape(const std::string& field);

Record sizing_record(const std::string& name, const Evaluation& e);
Record discrepancy_record(const Discrepancy& d);
std::vector<Record> discrepancy_records(std::span<const Discrepancy> ledger);
Record sweep_record(SweepParameter parameter, const SweepRow& row);
Record comparison_record(const TechnologyColumn& column);
Record break_even_record(const BreakEvenQuery& query, const BreakEvenResult& result);
Record curve_record(const CurvePoint& point);

} // namespace hypersize
