#pragma once
// RFC 4180 CSV output and a small reader for the hand-compiled input
// tables (award lists, seed titles).
//
// Output convention: LF line endings, floats rendered with 6 significant
// digits, fields quoted only when they contain a comma, quote, or newline.

#include "citemetrics/types.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace citemetrics {

inline std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

inline std::string csv_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

inline std::string csv_number(long long value) { return std::to_string(value); }
inline std::string csv_number(int value) { return std::to_string(value); }

inline void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << csv_field(fields[i]);
    }
    out << '\n';
}

// Splits one CSV line honoring RFC 4180 quoting.
inline std::vector<std::string> csv_split(const std::string& line,
                                          std::size_t lineno) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else {
            field += c;
        }
        ++i;
    }
    if (quoted) throw parse_error("unterminated quoted CSV field", lineno);
    fields.push_back(field);
    return fields;
}

// Reads a whole CSV file into rows of fields, dropping a trailing '\r' so
// CRLF inputs parse too. Returns rows paired with their 1-based line
// numbers; blank lines are skipped.
inline std::vector<std::pair<std::size_t, std::vector<std::string>>> csv_read(
    std::istream& in) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rows.emplace_back(lineno, csv_split(line, lineno));
    }
    return rows;
}

}  // namespace citemetrics
