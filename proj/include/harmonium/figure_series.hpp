// figure_series.hpp: named numeric columns plus a metadata block, with
// CSV and JSON emitters
//
// CSV layout:
//   # key: value          (one line per metadata entry, in insertion order)
//   col_a,col_b,...        (header)
//   1.5,2.25,...           (rows, %.17g so values round-trip exactly)
//
// JSON layout: {"metadata": {key: value, ...}, "series": {name: [..], ...}}

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "harmonium/errors.hpp"

namespace harmonium {

inline std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Compact form for labels and column names ("0.25", "-2").
inline std::string format_short(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

struct FigureSeries {
    std::string label;
    std::vector<std::pair<std::string, std::vector<double>>> columns;
    std::vector<std::pair<std::string, std::string>> metadata;

    std::vector<double>& add_column(std::string name, std::vector<double> values = {})
    {
        columns.emplace_back(std::move(name), std::move(values));
        return columns.back().second;
    }

    void set_meta(std::string key, std::string value)
    {
        for (auto& [k, v] : metadata) {
            if (k == key) {
                v = std::move(value);
                return;
            }
        }
        metadata.emplace_back(std::move(key), std::move(value));
    }

    const std::vector<double>& column(std::string_view name) const
    {
        for (const auto& [n, v] : columns) {
            if (n == name) {
                return v;
            }
        }
        throw domain_error("no column named '" + std::string(name) + "'");
    }

    bool has_column(std::string_view name) const
    {
        return std::any_of(columns.begin(), columns.end(), [&](const auto& c) { return c.first == name; });
    }

    std::string meta(std::string_view key) const
    {
        for (const auto& [k, v] : metadata) {
            if (k == key) {
                return v;
            }
        }
        throw domain_error("no metadata key '" + std::string(key) + "'");
    }

    std::size_t rows() const { return columns.empty() ? 0 : columns.front().second.size(); }

    void check_shape() const
    {
        for (const auto& [n, v] : columns) {
            if (v.size() != rows()) {
                throw domain_error("column '" + n + "' has " + std::to_string(v.size()) + " rows, expected "
                                   + std::to_string(rows()));
            }
        }
    }
};

inline void write_csv(std::ostream& os, const FigureSeries& s)
{
    s.check_shape();
    os << "# label: " << s.label << '\n';
    for (const auto& [k, v] : s.metadata) {
        os << "# " << k << ": " << v << '\n';
    }
    for (std::size_t c = 0; c < s.columns.size(); ++c) {
        os << (c ? "," : "") << s.columns[c].first;
    }
    os << '\n';
    for (std::size_t r = 0; r < s.rows(); ++r) {
        for (std::size_t c = 0; c < s.columns.size(); ++c) {
            os << (c ? "," : "") << format_double(s.columns[c].second[r]);
        }
        os << '\n';
    }
}

inline FigureSeries read_csv(std::istream& is)
{
    FigureSeries s;
    std::string line;
    bool header = false;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            const auto colon = line.find(": ");
            if (colon == std::string::npos || colon < 2) {
                continue;
            }
            std::string key = line.substr(2, colon - 2);
            std::string value = line.substr(colon + 2);
            if (key == "label") {
                s.label = std::move(value);
            } else {
                s.metadata.emplace_back(std::move(key), std::move(value));
            }
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        if (!header) {
            while (std::getline(ss, cell, ',')) {
                s.add_column(cell);
            }
            header = true;
            continue;
        }
        std::size_t c = 0;
        while (std::getline(ss, cell, ',')) {
            if (c >= s.columns.size()) {
                throw domain_error("CSV row has more cells than the header");
            }
            double v = 0.0;
            const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (res.ec != std::errc{}) {
                // from_chars rejects "inf"/"nan" spellings on some libraries
                v = std::stod(cell);
            }
            s.columns[c++].second.push_back(v);
        }
        if (c != s.columns.size()) {
            throw domain_error("CSV row has fewer cells than the header");
        }
    }
    return s;
}

inline nlohmann::ordered_json to_json(const FigureSeries& s)
{
    s.check_shape();
    nlohmann::ordered_json j;
    j["metadata"]["label"] = s.label;
    for (const auto& [k, v] : s.metadata) {
        j["metadata"][k] = v;
    }
    j["series"] = nlohmann::ordered_json::object();
    for (const auto& [n, v] : s.columns) {
        j["series"][n] = v;
    }
    return j;
}

inline void write_json(std::ostream& os, const FigureSeries& s)
{
    os << to_json(s).dump(2) << '\n';
}

} // namespace harmonium
