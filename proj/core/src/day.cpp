#include "cte/day.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <ostream>

namespace cte {
namespace {

// Civil-from-days / days-from-civil after Howard Hinnant's algorithms,
// shifted so that ordinal 0 is 0001-01-01 instead of 1970-01-01.
constexpr std::int64_t kUnixEpochOrdinal = 719162;  // 1970-01-01

struct Civil {
    int year;
    int month;
    int day;
};

Civil civil_from_ordinal(std::int64_t ordinal) {
    std::int64_t z = ordinal - kUnixEpochOrdinal;
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const std::int64_t doe = z - era * 146097;
    const std::int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = yoe + era * 400;
    const std::int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const std::int64_t mp = (5 * doy + 2) / 153;
    const std::int64_t d = doy - (153 * mp + 2) / 5 + 1;
    const std::int64_t m = mp + (mp < 10 ? 3 : -9);
    return Civil{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

std::int64_t ordinal_from_civil(int y, int m, int d) {
    const std::int64_t yy = y - (m <= 2);
    const std::int64_t era = (yy >= 0 ? yy : yy - 399) / 400;
    const std::int64_t yoe = yy - era * 400;
    const std::int64_t doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + doe - 719468 + kUnixEpochOrdinal;
}

bool is_leap(int y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

int days_in_month(int y, int m) {
    static constexpr std::array<int, 12> lengths{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return lengths[static_cast<std::size_t>(m - 1)];
}

}  // namespace

Day Day::from_ymd(int year, int month, int day_of_month) {
    if (month < 1 || month > 12) {
        throw InvalidDate("month out of range: " + std::to_string(month));
    }
    if (day_of_month < 1 || day_of_month > days_in_month(year, month)) {
        throw InvalidDate("invalid calendar date: " + std::to_string(year) + "-" +
                          std::to_string(month) + "-" + std::to_string(day_of_month));
    }
    return Day(ordinal_from_civil(year, month, day_of_month));
}

Day Day::from_iso(std::string_view iso) {
    // YYYY-MM-DD with a four-or-more digit year.
    const auto dash1 = iso.find('-', 1);  // allow a leading '-' for negative years
    if (dash1 == std::string_view::npos) throw InvalidDate("not an ISO-8601 date: " + std::string(iso));
    const auto dash2 = iso.find('-', dash1 + 1);
    if (dash2 == std::string_view::npos) throw InvalidDate("not an ISO-8601 date: " + std::string(iso));

    auto parse_int = [&](std::string_view part, int& out) {
        const char* first = part.data();
        const char* last = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(first, last, out);
        return ec == std::errc() && ptr == last && !part.empty();
    };

    int y = 0, m = 0, d = 0;
    if (!parse_int(iso.substr(0, dash1), y) ||
        !parse_int(iso.substr(dash1 + 1, dash2 - dash1 - 1), m) ||
        !parse_int(iso.substr(dash2 + 1), d)) {
        throw InvalidDate("not an ISO-8601 date: " + std::string(iso));
    }
    return from_ymd(y, m, d);
}

int Day::year() const { return civil_from_ordinal(ordinal_).year; }
int Day::month() const { return civil_from_ordinal(ordinal_).month; }
int Day::day_of_month() const { return civil_from_ordinal(ordinal_).day; }

Weekday Day::weekday() const {
    // Ordinal 0 (0001-01-01) is a Monday in the proleptic Gregorian calendar.
    std::int64_t w = ordinal_ % 7;
    if (w < 0) w += 7;
    return static_cast<Weekday>(w);
}

std::string Day::iso() const {
    const Civil c = civil_from_ordinal(ordinal_);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", c.year, c.month, c.day);
    return std::string(buf);
}

std::ostream& operator<<(std::ostream& os, const Day& d) { return os << d.iso(); }

std::string to_string(Weekday w) {
    static constexpr std::array<const char*, 7> names{
        "Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"};
    return names[static_cast<std::size_t>(w)];
}

Weekday weekday_from_string(std::string_view s) {
    std::string lower;
    lower.reserve(s.size());
    for (char c : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    static constexpr std::array<const char*, 7> full{
        "monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday"};
    static constexpr std::array<const char*, 7> abbr{"mon", "tue", "wed", "thu", "fri", "sat", "sun"};
    for (std::size_t i = 0; i < 7; ++i) {
        if (lower == full[i] || lower == abbr[i]) return static_cast<Weekday>(i);
    }
    throw InvalidDate("not a weekday name: " + std::string(s));
}

Day TimePoint::day() const {
    if (!is_finite()) throw ExtremeArithmetic("no day value at " + to_string());
    return day_;
}

TimePoint TimePoint::plus_days(std::int64_t n) const {
    if (!is_finite()) throw ExtremeArithmetic("cannot add days to " + to_string());
    return TimePoint(day_.plus_days(n));
}

std::int64_t TimePoint::days_since(const TimePoint& other) const {
    if (!is_finite() || !other.is_finite()) {
        throw ExtremeArithmetic("cannot take a day difference involving an extreme point");
    }
    return day_.days_since(other.day_);
}

std::string TimePoint::to_string() const {
    switch (kind_) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "+inf";
        default: return day_.iso();
    }
}

std::ostream& operator<<(std::ostream& os, const TimePoint& t) { return os << t.to_string(); }

}  // namespace cte
