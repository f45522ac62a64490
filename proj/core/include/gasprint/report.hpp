#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gasprint/scenario.hpp"

namespace gasprint::io {

/// Left-aligned first column, right-aligned numeric columns, `-` rule under
/// the header.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> row);
    void add_rule();
    void print(std::ostream& out) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;  // empty row = rule
};

/// Fixed-point text with `decimals` digits.
[[nodiscard]] std::string fixed(double value, int decimals = 2);

void print_scenario_table(std::ostream& out, const ScenarioReport& report);

/// `Transaction;Count;Gas;Fee;Emissions` followed by one row per line and a
/// `Total` row. Values are written unrounded.
void write_scenario_csv(std::ostream& out, const ScenarioReport& report);

}  // namespace gasprint::io
