#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace salesforge {

// Minimal RFC-4180-style CSV reader: quoted fields, embedded commas/quotes,
// CR/LF tolerant. Tracks the 1-based line each row starts on so schema
// errors can point at the offending input line.
class CsvReader {
public:
    explicit CsvReader(std::string path); // throws IoError if unreadable

    // Next logical row, or nullopt at end of input. Empty lines are skipped.
    std::optional<std::vector<std::string>> next_row();

    // Line number the most recently returned row started on.
    std::size_t row_line() const { return row_line_; }

    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::string buffer_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t row_line_ = 0;
};

// Quote a field if it contains a comma, quote or newline.
std::string csv_escape(const std::string& field);

// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

// Cell-level helpers shared by the loaders. A cell is "missing" when empty
// or (case-insensitively) the literal NA.
bool is_missing_cell(const std::string& raw);
std::optional<double> parse_double_cell(const std::string& raw);
std::optional<std::int64_t> parse_int_cell(const std::string& raw);
std::optional<bool> parse_bool_cell(const std::string& raw);

} // namespace salesforge
