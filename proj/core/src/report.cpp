#include "gasprint/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <utility>

#include "gasprint/series_csv.hpp"

namespace gasprint::io {

TextTable::TextTable(std::vector<std::string> header) : header_(std::move(header)) {}

void TextTable::add_row(std::vector<std::string> row) {
    row.resize(header_.size());
    rows_.push_back(std::move(row));
}

void TextTable::add_rule() { rows_.emplace_back(); }

void TextTable::print(std::ostream& out) const {
    std::vector<std::size_t> width(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c) width[c] = header_[c].size();
    for (const auto& row : rows_)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

    auto emit = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const std::string pad(width[c] - row[c].size(), ' ');
            if (c > 0) line += "  ";
            line += c == 0 ? row[c] + pad : pad + row[c];
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    };
    auto rule = [&] {
        std::size_t total = 0;
        for (auto w : width) total += w;
        out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
    };

    emit(header_);
    rule();
    for (const auto& row : rows_) {
        if (row.empty())
            rule();
        else
            emit(row);
    }
}

std::string fixed(double value, int decimals) {
    char buf[64];
    const int n = std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return std::string(buf, static_cast<std::size_t>(n));
}

void print_scenario_table(std::ostream& out, const ScenarioReport& report) {
    if (!report.name.empty()) out << report.name << '\n';
    out << "gas price: " << fixed(report.gas_price) << " Gwei (" << report.pricing << ")\n\n";

    TextTable table({"Transaction", "Count", "Gas", "Cost/tx (USD)", "Cost (USD)", "Impact (kgCO2eq)"});
    for (const auto& line : report.lines)
        table.add_row({line.label, std::to_string(line.count), format_number(line.gas_per_tx),
                       fixed(line.fee_per_tx), fixed(line.fee), fixed(line.emissions)});
    table.add_rule();
    table.add_row({"Total", "", "", "", fixed(report.total_fee), fixed(report.total_emissions)});
    table.print(out);

    out << "\noffset cost: " << fixed(report.offset_cost) << " USD at " << format_number(report.offset_rate)
        << " USD/kgCO2eq\n";
    out << "emissions are a lower bound; roughly " << fixed(report.equivalent_miles, 0)
        << " miles (" << fixed(report.equivalent_km, 0) << " km) of passenger-car driving\n";
}

void write_scenario_csv(std::ostream& out, const ScenarioReport& report) {
    std::string buf = "Transaction;Count;Gas;Fee;Emissions\n";
    for (const auto& line : report.lines) {
        buf += line.label + ";" + std::to_string(line.count) + ";" + format_number(line.gas_per_tx) +
               ";" + format_number(line.fee) + ";" + format_number(line.emissions) + "\n";
    }
    buf += "Total;;;" + format_number(report.total_fee) + ";" + format_number(report.total_emissions) + "\n";
    out << buf;
}

}  // namespace gasprint::io
