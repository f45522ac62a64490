#include <doctest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "gasprint/error.hpp"
#include "gasprint/series_csv.hpp"
#include "support/oracles.hpp"

using namespace gasprint;
using namespace gasprint::io;
using doctest::Approx;

TEST_CASE("single gas price row") {
    std::istringstream in("Hour;Gas Price\n2021-05-01 00:00;52.1\n");
    const auto s = read_gas_price_csv(in);
    REQUIRE(s.size() == 1);
    CHECK(s.samples()[0].price == 52.1);
    CHECK(format_timestamp(s.samples()[0].time) == "2021-05-01 00:00");
}

TEST_CASE("gas price file errors name the line") {
    auto error_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            (void)read_gas_price_csv(in);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(error_of("Hour;Gas Price\n2021-05-01 02:00;1\n2021-05-01 01:00;2\n").find("line 3") == 0);
    CHECK(error_of("Hour;Gas Price\n2021-05-01 01:00;1\n2021-05-01 01:00;2\n").find("line 3") == 0);
    CHECK(error_of("Hour,Gas Price\n2021-05-01 01:00,1\n").find("line 1") == 0);
    CHECK(error_of("Block;Revenue\n0;0\n").find("line 1") == 0);
    CHECK(error_of("").find("line 1") == 0);
    CHECK(error_of("Hour;Gas Price\n").find("no data rows") != std::string::npos);
    CHECK(error_of("Hour;Gas Price\n2021-05-01 00:00;abc\n").find("line 2") == 0);
    CHECK(error_of("Hour;Gas Price\n2021-05-01 0:00;1\n").find("line 2") == 0);
    CHECK(error_of("Hour;Gas Price\n2021-02-30 00:00;1\n").find("line 2") == 0);
    CHECK(error_of("Hour;Gas Price\n2021-05-01 24:00;1\n").find("line 2") == 0);
    CHECK(error_of("Hour;Gas Price\n2021-05-01 00:00;1;2\n").find("line 2") == 0);
    CHECK(error_of("Hour;Gas Price\n2021-05-01 00:00;-1\n").find("line 2") == 0);
}

TEST_CASE("CRLF line endings are tolerated on read") {
    std::istringstream in("Hour;Gas Price\r\n2021-05-01 00:00;52.1\r\n");
    CHECK(read_gas_price_csv(in).size() == 1);
}

TEST_CASE("gas price round trip over 24 hourly rows") {
    std::vector<GasPriceSample> samples;
    const Timestamp day{std::chrono::sys_days{std::chrono::year{2021} / 5 / 1}};
    for (int h = 0; h < 24; ++h)
        samples.push_back({day + std::chrono::hours{h}, oracle::uniform(10, 120)});
    const GasPriceSeries series(samples);
    std::ostringstream out;
    write_gas_price_csv(out, series);
    std::istringstream in(out.str());
    const auto back = read_gas_price_csv(in);
    CHECK(back == series);
    std::ostringstream again;
    write_gas_price_csv(again, back);
    CHECK(again.str() == out.str());
}

TEST_CASE("bundled file is reproduced byte for byte") {
    const auto path = std::filesystem::path(GASPRINT_DATA_DIR) / "GasPrice.csv";
    std::ifstream file(path, std::ios::binary);
    const std::string original((std::istreambuf_iterator<char>(file)), {});
    std::ostringstream out;
    write_gas_price_csv(out, read_gas_price_csv(path));
    CHECK(out.str() == original);
}

TEST_CASE("series writer format") {
    const std::vector<SeriesRow> rows{{0, 0.0}, {1, 1.7e-6}};
    std::ostringstream out;
    write_series_csv(out, kRevenueHeaderX, kRevenueHeaderY, rows);
    CHECK(out.str() == "Block;Revenue\n0;0\n1;1.7e-06\n");

    std::ostringstream empty;
    write_series_csv(empty, kRevenueHeaderX, kRevenueHeaderY, {});
    CHECK(empty.str() == "Block;Revenue\n");

    std::ostringstream bad;
    const std::vector<SeriesRow> nan_row{{0, std::numeric_limits<double>::quiet_NaN()}};
    CHECK_THROWS_AS(write_series_csv(bad, "a", "b", nan_row), DomainError);
    const std::vector<SeriesRow> inf_row{{std::numeric_limits<double>::infinity(), 0}};
    CHECK_THROWS_AS(write_series_csv(bad, "a", "b", inf_row), DomainError);
    CHECK(bad.str().empty());
}

TEST_CASE("number formatting") {
    CHECK(format_number(1160000.0) == "1160000");
    CHECK(format_number(-3.0) == "-3");
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(45.2) == "45.2");
    CHECK(parse_number("1e3") == 1000.0);
    CHECK_THROWS_AS((void)parse_number(""), ParseError);
    CHECK_THROWS_AS((void)parse_number("1,000"), ParseError);
    CHECK_THROWS_AS((void)parse_number("12abc"), ParseError);
    CHECK_THROWS_AS((void)parse_number("nan"), ParseError);
}

TEST_CASE("series round trip over 1000 random rows") {
    std::vector<SeriesRow> rows;
    for (int i = 0; i < 1000; ++i) {
        const double mag = std::pow(10.0, oracle::uniform(-12, 12));
        rows.push_back({static_cast<double>(i), (oracle::uniform(0, 1) < 0.5 ? -1 : 1) * mag});
    }
    std::ostringstream out;
    write_series_csv(out, kRevenueHeaderX, kRevenueHeaderY, rows);
    std::istringstream in(out.str());
    const auto file = read_series_csv(in, kRevenueHeaderX, kRevenueHeaderY);
    CHECK(file.header_x == "Block");
    CHECK(file.header_y == "Revenue");
    REQUIRE(file.rows.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(oracle::rel_close(file.rows[i].x, rows[i].x, 1e-12));
        CHECK(oracle::rel_close(file.rows[i].y, rows[i].y, 1e-12));
    }
    std::ostringstream again;
    write_series_csv(again, file.header_x, file.header_y, file.rows);
    CHECK(again.str() == out.str());
}

TEST_CASE("series reader header checks") {
    std::istringstream wrong("Block;Income\n0;1\n");
    CHECK_THROWS_AS((void)read_series_csv(wrong, kRevenueHeaderX, kRevenueHeaderY), ParseError);
    std::istringstream any("x;y\n0;1\n");
    CHECK(read_series_csv(any).header_x == "x");
}
