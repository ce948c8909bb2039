#include "oloid/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace oloid::io {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return fields;
}

double parse_double(const std::string& field, std::size_t line_no) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": not a number: '" + field + "'");
    }
    return v;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_header(std::size_t dimension) {
    return dimension == 2 ? "object,lambda,branch,t,xi,eta" : "object,lambda,branch,t,x,y,z";
}

void write_csv(std::ostream& out, const std::vector<sampling::Row>& rows, std::size_t dimension) {
    out << csv_header(dimension) << '\n';
    for (const auto& r : rows) {
        out << r.object << ',' << r.lambda << ',' << r.branch << ',' << format_double(r.t);
        for (std::size_t i = 0; i < dimension; ++i) {
            out << ',';
            if (i < r.coords.size()) out << format_double(r.coords[i]);
        }
        out << '\n';
    }
}

std::vector<sampling::Row> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV input");
    const std::size_t columns = split(line).size();
    if (columns != 6 && columns != 7) throw std::runtime_error("unexpected CSV header: " + line);
    std::vector<sampling::Row> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto f = split(line);
        if (f.size() != columns) throw std::runtime_error("line " + std::to_string(line_no) + ": wrong field count");
        sampling::Row r{f[0], f[1], f[2], parse_double(f[3], line_no), {}};
        if (!r.is_gap()) {
            for (std::size_t i = 4; i < columns; ++i) r.coords.push_back(parse_double(f[i], line_no));
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_json(std::ostream& out, const std::vector<sampling::Row>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"object", r.object}, {"lambda", r.lambda}, {"branch", r.branch}, {"t", r.t},
                       {"coords", r.coords}});
    }
    out << arr.dump(1) << '\n';
}

}  // namespace oloid::io
