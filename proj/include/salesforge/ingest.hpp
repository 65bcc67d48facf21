#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "salesforge/dates.hpp"

namespace salesforge::ingest {

// One row of the daily sales table. family, sales and onpromotion may be
// absent after loading (empty or NA cells); the structural key columns
// (id, date, store_nbr) are always required.
struct SalesRecord {
    std::int64_t id = 0;
    Date date;
    int store_nbr = 0;
    std::optional<std::string> family;
    std::optional<double> sales;       // >= 0, fractional allowed
    std::optional<std::int64_t> onpromotion; // >= 0

    bool operator==(const SalesRecord&) const = default;
};

struct StoreMeta {
    int store_nbr = 0;
    std::string city;
    std::string state;
    std::string type; // single letter
    int cluster = 0;  // >= 1
};

struct OilPrice {
    Date date;
    std::optional<double> price;
};

enum class HolidayLocale { National, Regional, Local };

struct HolidayEvent {
    Date date;
    std::string kind; // Holiday / Event / Transfer / ...
    HolidayLocale locale = HolidayLocale::National;
    std::string locale_name;
    std::string description;
    bool transferred = false;
};

struct RawTable {
    std::vector<SalesRecord> rows;
    std::string source_path;

    std::size_t row_count() const { return rows.size(); }
    bool operator==(const RawTable& o) const { return rows == o.rows; }
};

enum class NumericStrategy { Mean, Median };
enum class CategoricalStrategy { Mode };

struct ImputeCounts {
    std::size_t sales = 0;
    std::size_t onpromotion = 0;
    std::size_t family = 0;

    std::size_t total() const { return sales + onpromotion + family; }
};

// Loaders. Headers must match the documented schemas bit-exactly; malformed
// cells raise SchemaError naming the column and 1-based line.
RawTable load_sales_csv(const std::string& path);
std::vector<StoreMeta> load_store_metadata(const std::string& path);
std::vector<OilPrice> load_oil_prices(const std::string& path);
std::vector<HolidayEvent> load_holidays(const std::string& path);

// Fill missing sales/onpromotion with the column mean or median and missing
// family with the most frequent label (ties broken by lexicographic order).
// A column that is entirely missing raises ArgError naming it.
RawTable impute_missing(const RawTable& table, NumericStrategy numeric,
                        CategoricalStrategy categorical,
                        ImputeCounts* counts = nullptr);

// Remove exact duplicates (all fields equal, ignoring id), keeping the first
// occurrence and the original relative order.
RawTable drop_duplicates(const RawTable& table);

// Inverse of load_sales_csv: writes the documented header and one row per
// record, missing cells as empty fields, doubles in shortest round-trip form.
void write_sales_csv(const RawTable& table, const std::string& path);

void write_store_metadata_csv(const std::vector<StoreMeta>& stores,
                              const std::string& path);
void write_oil_prices_csv(const std::vector<OilPrice>& oil,
                          const std::string& path);
void write_holidays_csv(const std::vector<HolidayEvent>& holidays,
                        const std::string& path);

const std::string& holiday_locale_name(HolidayLocale locale);

} // namespace salesforge::ingest
