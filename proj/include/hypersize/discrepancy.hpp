#pragma once

#include <span>
#include <string>
#include <vector>

#include "hypersize/scenario.hpp"

namespace hypersize {

struct BreakEvenQuery;

// A published reference figure that the closed-form model does not
// reproduce, with the value the formulas give for the reference machine.
struct Discrepancy {
    std::string id;
    std::string quantity;
    std::string unit;
    double published_value;
    double formula_value;
    std::string note;
};

// Every known entry, in a fixed order.
std::vector<Discrepancy> full_ledger();

// Entries touched by sizing this scenario (size and sweep commands).
std::vector<Discrepancy> ledger_for_sizing(const Scenario& s);

// Union over the compared technologies, plus the thread-reduction entry
// when a superconducting column is compared against copper.
std::vector<Discrepancy> ledger_for_comparison(std::span<const Scenario> scenarios);

std::vector<Discrepancy> ledger_for_break_even(const BreakEvenQuery& q);

} // namespace hypersize
