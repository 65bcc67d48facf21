#include "salesforge/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "salesforge/csv.hpp"
#include "salesforge/error.hpp"

namespace salesforge::ingest {

namespace {

[[noreturn]] void schema_fail(const CsvReader& reader, const std::string& what) {
    throw SchemaError(reader.path() + ":" + std::to_string(reader.row_line()) +
                      ": " + what);
}

void expect_header(CsvReader& reader, const std::vector<std::string>& expected) {
    auto row = reader.next_row();
    if (!row) {
        throw SchemaError(reader.path() + ": empty file, expected header");
    }
    if (*row != expected) {
        std::string want;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) want += ",";
            want += expected[i];
        }
        schema_fail(reader, "bad header, expected '" + want + "'");
    }
}

void expect_width(CsvReader& reader, const std::vector<std::string>& row,
                  std::size_t width) {
    if (row.size() != width) {
        schema_fail(reader, "expected " + std::to_string(width) +
                                " fields, got " + std::to_string(row.size()));
    }
}

Date required_date(CsvReader& reader, const std::string& cell,
                   const std::string& column) {
    const auto d = parse_date(cell);
    if (!d) {
        schema_fail(reader, "column '" + column + "': invalid date '" + cell +
                                "' (expected YYYY-MM-DD)");
    }
    return *d;
}

std::int64_t required_int(CsvReader& reader, const std::string& cell,
                          const std::string& column) {
    const auto v = parse_int_cell(cell);
    if (!v) {
        schema_fail(reader,
                    "column '" + column + "': invalid integer '" + cell + "'");
    }
    return *v;
}

} // namespace

RawTable load_sales_csv(const std::string& path) {
    CsvReader reader(path);
    expect_header(reader,
                  {"id", "date", "store_nbr", "family", "sales", "onpromotion"});

    RawTable table;
    table.source_path = path;
    while (auto row = reader.next_row()) {
        expect_width(reader, *row, 6);
        SalesRecord rec;
        rec.id = required_int(reader, (*row)[0], "id");
        rec.date = required_date(reader, (*row)[1], "date");
        rec.store_nbr =
            static_cast<int>(required_int(reader, (*row)[2], "store_nbr"));

        if (!is_missing_cell((*row)[3])) rec.family = (*row)[3];

        if (!is_missing_cell((*row)[4])) {
            const auto v = parse_double_cell((*row)[4]);
            if (!v) {
                schema_fail(reader, "column 'sales': invalid number '" +
                                        (*row)[4] + "'");
            }
            if (*v < 0.0) {
                schema_fail(reader, "column 'sales': negative value " +
                                        format_double(*v));
            }
            rec.sales = *v;
        }

        if (!is_missing_cell((*row)[5])) {
            const auto v = parse_int_cell((*row)[5]);
            if (!v) {
                schema_fail(reader, "column 'onpromotion': invalid integer '" +
                                        (*row)[5] + "'");
            }
            if (*v < 0) {
                schema_fail(reader, "column 'onpromotion': negative value " +
                                        std::to_string(*v));
            }
            rec.onpromotion = *v;
        }

        table.rows.push_back(std::move(rec));
    }
    return table;
}

std::vector<StoreMeta> load_store_metadata(const std::string& path) {
    CsvReader reader(path);
    expect_header(reader, {"store_nbr", "city", "state", "type", "cluster"});

    std::vector<StoreMeta> stores;
    std::unordered_set<int> seen;
    while (auto row = reader.next_row()) {
        expect_width(reader, *row, 5);
        StoreMeta s;
        s.store_nbr =
            static_cast<int>(required_int(reader, (*row)[0], "store_nbr"));
        if (!seen.insert(s.store_nbr).second) {
            schema_fail(reader, "duplicate store_nbr " +
                                    std::to_string(s.store_nbr));
        }
        s.city = (*row)[1];
        s.state = (*row)[2];
        s.type = (*row)[3];
        s.cluster =
            static_cast<int>(required_int(reader, (*row)[4], "cluster"));
        if (s.cluster < 1) {
            schema_fail(reader,
                        "column 'cluster': must be >= 1, got " +
                            std::to_string(s.cluster));
        }
        stores.push_back(std::move(s));
    }
    return stores;
}

std::vector<OilPrice> load_oil_prices(const std::string& path) {
    CsvReader reader(path);
    expect_header(reader, {"date", "dcoilwtico"});

    std::vector<OilPrice> oil;
    std::set<Date> seen;
    while (auto row = reader.next_row()) {
        expect_width(reader, *row, 2);
        OilPrice p;
        p.date = required_date(reader, (*row)[0], "date");
        if (!seen.insert(p.date).second) {
            schema_fail(reader,
                        "duplicate oil date " + to_iso_string(p.date));
        }
        if (!is_missing_cell((*row)[1])) {
            const auto v = parse_double_cell((*row)[1]);
            if (!v) {
                schema_fail(reader, "column 'dcoilwtico': invalid number '" +
                                        (*row)[1] + "'");
            }
            if (*v < 0.0) {
                schema_fail(reader, "column 'dcoilwtico': negative value " +
                                        format_double(*v));
            }
            p.price = *v;
        }
        oil.push_back(p);
    }
    return oil;
}

namespace {

const std::string kLocaleNames[3] = {"National", "Regional", "Local"};

} // namespace

const std::string& holiday_locale_name(HolidayLocale locale) {
    return kLocaleNames[static_cast<int>(locale)];
}

std::vector<HolidayEvent> load_holidays(const std::string& path) {
    CsvReader reader(path);
    expect_header(
        reader, {"date", "type", "locale", "locale_name", "description",
                 "transferred"});

    std::vector<HolidayEvent> events;
    while (auto row = reader.next_row()) {
        expect_width(reader, *row, 6);
        HolidayEvent e;
        e.date = required_date(reader, (*row)[0], "date");
        e.kind = (*row)[1];
        if ((*row)[2] == "National") e.locale = HolidayLocale::National;
        else if ((*row)[2] == "Regional") e.locale = HolidayLocale::Regional;
        else if ((*row)[2] == "Local") e.locale = HolidayLocale::Local;
        else {
            schema_fail(reader, "column 'locale': expected "
                                "National/Regional/Local, got '" +
                                    (*row)[2] + "'");
        }
        e.locale_name = (*row)[3];
        e.description = (*row)[4];
        const auto b = parse_bool_cell((*row)[5]);
        if (!b) {
            schema_fail(reader, "column 'transferred': invalid boolean '" +
                                    (*row)[5] + "'");
        }
        e.transferred = *b;
        events.push_back(std::move(e));
    }
    return events;
}

RawTable impute_missing(const RawTable& table, NumericStrategy numeric,
                        CategoricalStrategy /*categorical: Mode only*/,
                        ImputeCounts* counts) {
    // Generic over the three imputable columns: sales and onpromotion are
    // numeric, family is categorical.
    std::vector<double> sales_present;
    std::vector<double> promo_present;
    std::map<std::string, std::size_t> family_freq;
    std::size_t sales_missing = 0, promo_missing = 0, family_missing = 0;

    for (const auto& r : table.rows) {
        if (r.sales) sales_present.push_back(*r.sales);
        else ++sales_missing;
        if (r.onpromotion) promo_present.push_back(static_cast<double>(*r.onpromotion));
        else ++promo_missing;
        if (r.family) ++family_freq[*r.family];
        else ++family_missing;
    }

    auto fill_value = [&](std::vector<double>& v,
                          const char* column) -> double {
        if (v.empty()) {
            throw ArgError(std::string("cannot impute column '") + column +
                           "': all values missing");
        }
        if (numeric == NumericStrategy::Mean) {
            double s = 0.0;
            for (const double x : v) s += x;
            return s / static_cast<double>(v.size());
        }
        std::sort(v.begin(), v.end());
        const std::size_t n = v.size();
        return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
    };

    double sales_fill = 0.0, promo_fill = 0.0;
    std::string family_fill;
    if (sales_missing > 0) sales_fill = fill_value(sales_present, "sales");
    if (promo_missing > 0) promo_fill = fill_value(promo_present, "onpromotion");
    if (family_missing > 0) {
        if (family_freq.empty()) {
            throw ArgError("cannot impute column 'family': all values missing");
        }
        // std::map iterates labels in lexicographic order, so keeping a
        // strict > comparison breaks frequency ties toward the smaller label.
        std::size_t best = 0;
        for (const auto& [label, freq] : family_freq) {
            if (freq > best) {
                best = freq;
                family_fill = label;
            }
        }
    }

    RawTable out = table;
    for (auto& r : out.rows) {
        if (!r.sales) r.sales = sales_fill;
        if (!r.onpromotion) {
            r.onpromotion = static_cast<std::int64_t>(std::llround(promo_fill));
        }
        if (!r.family) r.family = family_fill;
    }
    if (counts) {
        counts->sales = sales_missing;
        counts->onpromotion = promo_missing;
        counts->family = family_missing;
    }
    return out;
}

RawTable drop_duplicates(const RawTable& table) {
    // Duplicate identity ignores the synthetic id column.
    struct Key {
        std::string repr;
        bool operator<(const Key& o) const { return repr < o.repr; }
    };
    auto key_of = [](const SalesRecord& r) {
        std::ostringstream ss;
        ss << to_iso_string(r.date) << '|' << r.store_nbr << '|'
           << (r.family ? *r.family : "\x01") << '|'
           << (r.sales ? format_double(*r.sales) : "\x01") << '|'
           << (r.onpromotion ? std::to_string(*r.onpromotion) : "\x01");
        return Key{std::move(ss).str()};
    };

    RawTable out;
    out.source_path = table.source_path;
    std::set<Key> seen;
    for (const auto& r : table.rows) {
        if (seen.insert(key_of(r)).second) out.rows.push_back(r);
    }
    return out;
}

void write_sales_csv(const RawTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << "id,date,store_nbr,family,sales,onpromotion\n";
    for (const auto& r : table.rows) {
        out << r.id << ',' << to_iso_string(r.date) << ',' << r.store_nbr
            << ',' << (r.family ? csv_escape(*r.family) : std::string{}) << ','
            << (r.sales ? format_double(*r.sales) : std::string{}) << ','
            << (r.onpromotion ? std::to_string(*r.onpromotion) : std::string{})
            << '\n';
    }
    if (!out.flush()) throw IoError("failed writing file: " + path);
}

void write_store_metadata_csv(const std::vector<StoreMeta>& stores,
                              const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << "store_nbr,city,state,type,cluster\n";
    for (const auto& s : stores) {
        out << s.store_nbr << ',' << csv_escape(s.city) << ','
            << csv_escape(s.state) << ',' << csv_escape(s.type) << ','
            << s.cluster << '\n';
    }
    if (!out.flush()) throw IoError("failed writing file: " + path);
}

void write_oil_prices_csv(const std::vector<OilPrice>& oil,
                          const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << "date,dcoilwtico\n";
    for (const auto& p : oil) {
        out << to_iso_string(p.date) << ','
            << (p.price ? format_double(*p.price) : std::string{}) << '\n';
    }
    if (!out.flush()) throw IoError("failed writing file: " + path);
}

void write_holidays_csv(const std::vector<HolidayEvent>& holidays,
                        const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << "date,type,locale,locale_name,description,transferred\n";
    for (const auto& e : holidays) {
        out << to_iso_string(e.date) << ',' << csv_escape(e.kind) << ','
            << holiday_locale_name(e.locale) << ',' << csv_escape(e.locale_name)
            << ',' << csv_escape(e.description) << ','
            << (e.transferred ? "True" : "False") << '\n';
    }
    if (!out.flush()) throw IoError("failed writing file: " + path);
}

} // namespace salesforge::ingest
