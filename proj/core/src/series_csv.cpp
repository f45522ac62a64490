#include "gasprint/series_csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "gasprint/error.hpp"

namespace gasprint::io {

namespace {

bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

struct Fields {
    std::string_view first;
    std::string_view second;
};

Fields split_row(std::string_view line, std::size_t line_no) {
    const auto pos = line.find(kSeparator);
    if (pos == std::string_view::npos)
        throw ParseError("expected two fields separated by ';'", line_no);
    if (line.find(kSeparator, pos + 1) != std::string_view::npos)
        throw ParseError("expected exactly two fields", line_no);
    return {line.substr(0, pos), line.substr(pos + 1)};
}

int parse_fixed_int(std::string_view text, std::size_t line) {
    int v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty() || text.front() == '-')
        throw ParseError("malformed timestamp field '" + std::string(text) + "'", line);
    return v;
}

void expect_header(std::istream& in, std::string_view x, std::string_view y,
                   std::string& got_x, std::string& got_y) {
    std::string header;
    if (!read_line(in, header)) throw ParseError("missing header line", 1);
    const auto fields = split_row(header, 1);
    got_x = std::string(fields.first);
    got_y = std::string(fields.second);
    if ((!x.empty() && fields.first != x) || (!y.empty() && fields.second != y))
        throw ParseError("expected header '" + std::string(x) + ";" + std::string(y) + "', found '" +
                             header + "'",
                         1);
}

}  // namespace

std::string format_number(double value) {
    if (!std::isfinite(value)) throw DomainError("cannot serialize a non-finite number");
    char buf[64];
    std::to_chars_result res;
    if (value == std::trunc(value) && std::abs(value) < 9007199254740992.0)
        res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
    else
        res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

double parse_number(std::string_view text, std::size_t line) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v))
        throw ParseError("malformed number '" + std::string(text) + "'", line);
    return v;
}

std::string format_timestamp(Timestamp t) {
    using namespace std::chrono;
    const auto day = floor<days>(t);
    const year_month_day ymd{day};
    const hh_mm_ss hms{t - day};
    char buf[32];
    const int n = std::snprintf(buf, sizeof buf, "%04d-%02u-%02u %02d:%02d", static_cast<int>(ymd.year()),
                                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                                static_cast<int>(hms.hours().count()),
                                static_cast<int>(hms.minutes().count()));
    return std::string(buf, static_cast<std::size_t>(n));
}

Timestamp parse_timestamp(std::string_view text, std::size_t line) {
    using namespace std::chrono;
    // YYYY-MM-DD HH:MM
    if (text.size() != 16 || text[4] != '-' || text[7] != '-' || text[10] != ' ' || text[13] != ':')
        throw ParseError("timestamp '" + std::string(text) + "' is not 'YYYY-MM-DD HH:MM'", line);
    const int yy = parse_fixed_int(text.substr(0, 4), line);
    const int mo = parse_fixed_int(text.substr(5, 2), line);
    const int dd = parse_fixed_int(text.substr(8, 2), line);
    const int hh = parse_fixed_int(text.substr(11, 2), line);
    const int mi = parse_fixed_int(text.substr(14, 2), line);
    const year_month_day ymd{year{yy}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(dd)}};
    if (!ymd.ok() || hh > 23 || mi > 59)
        throw ParseError("timestamp '" + std::string(text) + "' is out of range", line);
    return Timestamp{sys_days{ymd}} + hours{hh} + minutes{mi};
}

GasPriceSeries read_gas_price_csv(std::istream& in) {
    std::string hx, hy;
    expect_header(in, kGasPriceHeaderX, kGasPriceHeaderY, hx, hy);
    std::vector<GasPriceSample> samples;
    std::string line;
    for (std::size_t line_no = 2; read_line(in, line); ++line_no) {
        if (line.empty()) continue;
        const auto f = split_row(line, line_no);
        GasPriceSample s{parse_timestamp(f.first, line_no), parse_number(f.second, line_no)};
        if (s.price < 0.0) throw ParseError("gas price must be >= 0", line_no);
        if (!samples.empty() && !(samples.back().time < s.time))
            throw ParseError("timestamp " + std::string(f.first) + " is not after the previous row",
                             line_no);
        samples.push_back(s);
    }
    if (samples.empty()) throw ParseError("gas price file has no data rows");
    return GasPriceSeries(std::move(samples));
}

GasPriceSeries read_gas_price_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    try {
        return read_gas_price_csv(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_gas_price_csv(std::ostream& out, const GasPriceSeries& series) {
    std::string buf;
    buf.append(kGasPriceHeaderX).push_back(kSeparator);
    buf.append(kGasPriceHeaderY).push_back('\n');
    for (const auto& s : series.samples()) {
        buf += format_timestamp(s.time);
        buf.push_back(kSeparator);
        buf += format_number(s.price);
        buf.push_back('\n');
    }
    out << buf;
}

void write_series_csv(std::ostream& out, std::string_view header_x, std::string_view header_y,
                      std::span<const SeriesRow> rows) {
    std::string buf;
    buf.append(header_x).push_back(kSeparator);
    buf.append(header_y).push_back('\n');
    for (const auto& r : rows) {
        buf += format_number(r.x);
        buf.push_back(kSeparator);
        buf += format_number(r.y);
        buf.push_back('\n');
    }
    out << buf;
}

SeriesFile read_series_csv(std::istream& in, std::string_view expected_x,
                           std::string_view expected_y) {
    SeriesFile file;
    expect_header(in, expected_x, expected_y, file.header_x, file.header_y);
    std::string line;
    for (std::size_t line_no = 2; read_line(in, line); ++line_no) {
        if (line.empty()) continue;
        const auto f = split_row(line, line_no);
        file.rows.push_back({parse_number(f.first, line_no), parse_number(f.second, line_no)});
    }
    if (file.rows.empty()) throw ParseError("series file has no data rows");
    return file;
}

}  // namespace gasprint::io
