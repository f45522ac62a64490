#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gasprint/gas_price_series.hpp"

namespace gasprint::io {

inline constexpr char kSeparator = ';';
inline constexpr std::string_view kGasPriceHeaderX = "Hour";
inline constexpr std::string_view kGasPriceHeaderY = "Gas Price";
inline constexpr std::string_view kRevenueHeaderX = "Block";
inline constexpr std::string_view kRevenueHeaderY = "Revenue";

struct SeriesRow {
    double x = 0.0;
    double y = 0.0;
};

/// Two-column numeric file: `x;y` header, one `x;y` row per line.
struct SeriesFile {
    std::string header_x;
    std::string header_y;
    std::vector<SeriesRow> rows;
};

/// Shortest decimal text that parses back to exactly `value`. No exponent
/// for integers below 2^53. Throws DomainError for NaN or infinities.
[[nodiscard]] std::string format_number(double value);

/// Strict decimal parse of the whole field. Throws ParseError.
[[nodiscard]] double parse_number(std::string_view text, std::size_t line = 0);

/// Timestamps are `YYYY-MM-DD HH:MM`, UTC.
[[nodiscard]] std::string format_timestamp(Timestamp t);
[[nodiscard]] Timestamp parse_timestamp(std::string_view text, std::size_t line = 0);

/// Reads a `Hour;Gas Price` file. Throws ParseError naming the line for a
/// wrong header, malformed row, out-of-order timestamp or empty body.
[[nodiscard]] GasPriceSeries read_gas_price_csv(std::istream& in);
[[nodiscard]] GasPriceSeries read_gas_price_csv(const std::filesystem::path& path);

void write_gas_price_csv(std::ostream& out, const GasPriceSeries& series);

/// Writes header and rows with `\n` line endings. Throws DomainError on
/// non-finite values before writing anything.
void write_series_csv(std::ostream& out, std::string_view header_x, std::string_view header_y,
                      std::span<const SeriesRow> rows);

/// Reads any two-column numeric series. When `expected_x`/`expected_y` are
/// non-empty the header must match them exactly.
[[nodiscard]] SeriesFile read_series_csv(std::istream& in, std::string_view expected_x = {},
                                         std::string_view expected_y = {});

}  // namespace gasprint::io
