#include "salesforge/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "salesforge/error.hpp"

namespace salesforge {

CsvReader::CsvReader(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path_);
    std::ostringstream ss;
    ss << in.rdbuf();
    buffer_ = std::move(ss).str();
}

std::optional<std::vector<std::string>> CsvReader::next_row() {
    // Skip blank lines.
    while (pos_ < buffer_.size() &&
           (buffer_[pos_] == '\n' || buffer_[pos_] == '\r')) {
        if (buffer_[pos_] == '\n') ++line_;
        ++pos_;
    }
    if (pos_ >= buffer_.size()) return std::nullopt;

    row_line_ = line_;
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    while (pos_ < buffer_.size()) {
        const char c = buffer_[pos_];
        if (in_quotes) {
            if (c == '"') {
                if (pos_ + 1 < buffer_.size() && buffer_[pos_ + 1] == '"') {
                    field.push_back('"');
                    pos_ += 2;
                } else {
                    in_quotes = false;
                    ++pos_;
                }
            } else {
                if (c == '\n') ++line_;
                field.push_back(c);
                ++pos_;
            }
            continue;
        }
        switch (c) {
        case '"':
            in_quotes = true;
            ++pos_;
            break;
        case ',':
            fields.push_back(std::move(field));
            field.clear();
            ++pos_;
            break;
        case '\r':
            ++pos_;
            break;
        case '\n':
            ++line_;
            ++pos_;
            fields.push_back(std::move(field));
            return fields;
        default:
            field.push_back(c);
            ++pos_;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string lowered(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return s;
}

} // namespace

bool is_missing_cell(const std::string& raw) {
    const std::string s = trimmed(raw);
    return s.empty() || lowered(s) == "na";
}

std::optional<double> parse_double_cell(const std::string& raw) {
    const std::string s = trimmed(raw);
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) return std::nullopt;
    return value;
}

std::optional<std::int64_t> parse_int_cell(const std::string& raw) {
    const std::string s = trimmed(raw);
    std::int64_t value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) return std::nullopt;
    return value;
}

std::optional<bool> parse_bool_cell(const std::string& raw) {
    const std::string s = lowered(trimmed(raw));
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    return std::nullopt;
}

} // namespace salesforge
