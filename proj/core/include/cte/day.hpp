#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "cte/errors.hpp"

namespace cte {

enum class Weekday { Monday = 0, Tuesday, Wednesday, Thursday, Friday, Saturday, Sunday };

std::string to_string(Weekday w);
// Accepts "Mon" / "Monday" (case-insensitive); throws InvalidDate otherwise.
Weekday weekday_from_string(std::string_view s);

// A proleptic-Gregorian calendar day. The ordinal counts days since
// 0001-01-01 (ordinal 0), so ordering and day arithmetic are plain
// integer operations.
class Day {
public:
    Day() = default;  // 0001-01-01

    static Day from_ordinal(std::int64_t ordinal) { return Day(ordinal); }
    // Validates the civil date; (2018, 2, 29) -> InvalidDate.
    static Day from_ymd(int year, int month, int day_of_month);
    // Parses "YYYY-MM-DD"; throws InvalidDate on malformed input.
    static Day from_iso(std::string_view iso);

    std::int64_t ordinal() const { return ordinal_; }
    int year() const;
    int month() const;
    int day_of_month() const;
    Weekday weekday() const;

    std::string iso() const;

    Day plus_days(std::int64_t n) const { return Day(ordinal_ + n); }
    // *this - other, in days.
    std::int64_t days_since(const Day& other) const { return ordinal_ - other.ordinal_; }

    auto operator<=>(const Day&) const = default;

private:
    explicit Day(std::int64_t ordinal) : ordinal_(ordinal) {}
    std::int64_t ordinal_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Day& d);

// A day extended with the extreme points: the unbounded past and future.
// Extremes compare against everything but reject arithmetic.
class TimePoint {
public:
    TimePoint() : TimePoint(Day{}) {}
    TimePoint(Day d) : kind_(Kind::Finite), day_(d) {}  // implicit by design

    static TimePoint neg_infinity() { return TimePoint(Kind::NegInf); }
    static TimePoint pos_infinity() { return TimePoint(Kind::PosInf); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_infinity() const { return kind_ == Kind::NegInf; }
    bool is_pos_infinity() const { return kind_ == Kind::PosInf; }

    // The underlying day; throws ExtremeArithmetic on an extreme point.
    Day day() const;

    TimePoint plus_days(std::int64_t n) const;
    std::int64_t days_since(const TimePoint& other) const;

    std::string to_string() const;  // "-inf", "YYYY-MM-DD" or "+inf"

    friend bool operator==(const TimePoint& a, const TimePoint& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.day_ == b.day_);
    }
    friend std::strong_ordering operator<=>(const TimePoint& a, const TimePoint& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        if (a.kind_ == Kind::Finite) return a.day_ <=> b.day_;
        return std::strong_ordering::equal;
    }

private:
    enum class Kind { NegInf = 0, Finite = 1, PosInf = 2 };
    explicit TimePoint(Kind k) : kind_(k) {}

    Kind kind_;
    Day day_;
};

std::ostream& operator<<(std::ostream& os, const TimePoint& t);

// Spec-level names for the basic day operations.
inline Day make_day(int year, int month, int day_of_month) {
    return Day::from_ymd(year, month, day_of_month);
}
inline Day add_days(const Day& d, std::int64_t n) { return d.plus_days(n); }
inline std::int64_t diff_days(const Day& a, const Day& b) { return a.days_since(b); }

}  // namespace cte
