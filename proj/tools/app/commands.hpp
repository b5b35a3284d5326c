#pragma once

#include "scenario.hpp"

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace d2d::app {

using Cell = std::variant<double, long long, std::string>;

/// A rectangular result set. Column order is part of the output contract.
struct Table {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;
};

Table cmd_guard(const Scenario& s);
Table cmd_bounds(const Scenario& s);
Table cmd_sweep(const Scenario& s);
Table cmd_simulate(const Scenario& s);

void write_csv(std::ostream& out, const Table& table, const Scenario& s);
void write_json(std::ostream& out, const Table& table, const Scenario& s);
void write_table(std::ostream& out, const Table& table, const Scenario& s);

} // namespace d2d::app
