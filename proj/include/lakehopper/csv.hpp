#pragma once

// RFC 4180 CSV reading/writing. Quoted fields may contain commas, doubled
// quotes and embedded line breaks; both LF and CRLF record separators are
// accepted on input, CRLF is written on output.

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "lakehopper/errors.hpp"

namespace lakehopper {

using CsvRecord = std::vector<std::string>;

inline std::vector<CsvRecord> read_csv(std::istream& in) {
    std::vector<CsvRecord> records;
    CsvRecord record;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;  // the current record has at least one field
    char c;
    while (in.get(c)) {
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field += '"';
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                in_quotes = true;
                field_started = true;
                break;
            case ',':
                record.push_back(std::move(field));
                field.clear();
                field_started = true;
                break;
            case '\r':
                if (in.peek() == '\n') in.get(c);
                [[fallthrough]];
            case '\n':
                if (field_started || !record.empty()) {
                    record.push_back(std::move(field));
                    field.clear();
                    records.push_back(std::move(record));
                    record.clear();
                }
                field_started = false;
                break;
            default:
                field += c;
                field_started = true;
        }
    }
    if (in_quotes) throw DataError("csv: unterminated quoted field");
    if (field_started || !field.empty() || !record.empty()) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }
    return records;
}

inline std::string csv_escape(const std::string& field) {
    bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

inline void write_csv(std::ostream& out, const std::vector<CsvRecord>& records) {
    for (const auto& record : records) {
        // a lone empty field must be written quoted, or the row would read
        // back as a blank line
        if (record.size() == 1 && record[0].empty()) {
            out << "\"\"\r\n";
            continue;
        }
        for (size_t i = 0; i < record.size(); ++i) {
            if (i) out << ',';
            out << csv_escape(record[i]);
        }
        out << "\r\n";
    }
}

}  // namespace lakehopper
