#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace salesforge {

// Proleptic Gregorian calendar date. Stored as (y, m, d); arithmetic goes
// through the civil-day count (days since 1970-01-01).
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;
};

bool is_leap_year(int year);
int days_in_month(int year, int month);

// Days since 1970-01-01 (negative before).
std::int64_t to_civil_days(const Date& d);
Date from_civil_days(std::int64_t days);

// 0 = Monday ... 6 = Sunday.
int day_of_week_monday0(const Date& d);

// 1-based ordinal day within the year.
int day_of_year(const Date& d);

Date add_days(const Date& d, std::int64_t n);

// Strict ISO-8601 (YYYY-MM-DD). Returns nullopt on any malformation,
// including out-of-range components.
std::optional<Date> parse_date(const std::string& s);

std::string to_iso_string(const Date& d);

} // namespace salesforge
