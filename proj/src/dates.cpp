#include "salesforge/dates.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace salesforge {

bool is_leap_year(int year) {
    if (year % 400 == 0) return true;
    if (year % 100 == 0) return false;
    return year % 4 == 0;
}

int days_in_month(int year, int month) {
    static constexpr std::array<int, 12> k = {31, 28, 31, 30, 31, 30,
                                              31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12) return 0;
    if (month == 2 && is_leap_year(year)) return 29;
    return k[static_cast<std::size_t>(month - 1)];
}

// Howard Hinnant's civil-days algorithm.
std::int64_t to_civil_days(const Date& d) {
    int y = d.year;
    const unsigned m = static_cast<unsigned>(d.month);
    const unsigned dd = static_cast<unsigned>(d.day);
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m > 2 ? m - 3 : m + 9) + 2) / 5 + dd - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

Date from_civil_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp < 10 ? mp + 3 : mp - 9;
    return Date{static_cast<int>(y + (m <= 2)), static_cast<int>(m),
                static_cast<int>(d)};
}

int day_of_week_monday0(const Date& d) {
    const std::int64_t days = to_civil_days(d);
    // 1970-01-01 was a Thursday (index 3 with Monday = 0).
    return static_cast<int>(((days % 7) + 7 + 3) % 7);
}

int day_of_year(const Date& d) {
    return static_cast<int>(to_civil_days(d) -
                            to_civil_days(Date{d.year, 1, 1})) +
           1;
}

Date add_days(const Date& d, std::int64_t n) {
    return from_civil_days(to_civil_days(d) + n);
}

namespace {

bool parse_fixed_int(const std::string& s, std::size_t off, std::size_t len,
                     int& out) {
    int value = 0;
    if (off + len > s.size()) return false;
    for (std::size_t i = 0; i < len; ++i) {
        const char c = s[off + i];
        if (c < '0' || c > '9') return false;
        value = value * 10 + (c - '0');
    }
    out = value;
    return true;
}

} // namespace

std::optional<Date> parse_date(const std::string& s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    int y = 0, m = 0, d = 0;
    if (!parse_fixed_int(s, 0, 4, y) || !parse_fixed_int(s, 5, 2, m) ||
        !parse_fixed_int(s, 8, 2, d)) {
        return std::nullopt;
    }
    if (m < 1 || m > 12 || d < 1 || d > days_in_month(y, m)) return std::nullopt;
    return Date{y, m, d};
}

std::string to_iso_string(const Date& d) {
    char buf[12];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

} // namespace salesforge
