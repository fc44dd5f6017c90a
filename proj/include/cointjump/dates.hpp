#pragma once

#include <string>

namespace cointjump {

/// Proleptic Gregorian calendar date. Arithmetic goes through the
/// days-since-epoch serial (1970-01-01 = 0).
struct Date {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31

    static Date from_serial(long serial);
    static Date parse_iso(const std::string& s);  // YYYY-MM-DD

    long serial() const;
    int weekday() const;  // 0 = Monday .. 6 = Sunday
    std::string to_string() const;

    Date plus_days(long n) const { return from_serial(serial() + n); }

    friend bool operator==(const Date& a, const Date& b) = default;
    friend auto operator<=>(const Date& a, const Date& b) = default;
};

inline long operator-(const Date& a, const Date& b) { return a.serial() - b.serial(); }

}  // namespace cointjump
