#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "cte/day.hpp"

namespace cte {

// A named property of calendar days, e.g. "GeneralBusinessDay".
using DayProperty = std::string;

// Membership rules. A property may apply to an unbounded family of days
// (weekday rules, nth-weekday rules, predicates) or to a fixed list.
struct ExplicitSetRule {
    std::vector<Day> days;  // kept sorted and unique
};
struct WeekdayRule {
    std::set<Weekday> weekdays;
    std::vector<Day> holidays;  // excluded even when the weekday matches
};
struct NthWeekdayRule {
    int nth = 1;  // 1..5, within each month
    Weekday weekday = Weekday::Monday;
};
struct PredicateRule {
    std::function<bool(const Day&)> predicate;
    std::string label;  // printable stand-in for the closure
};

using PropertyRule = std::variant<ExplicitSetRule, WeekdayRule, NthWeekdayRule, PredicateRule>;

bool rule_matches(const PropertyRule& rule, const Day& d);

// Default search bound for "first day with property P after X" style scans,
// which must terminate even for properties that never occur again.
inline constexpr std::int64_t kDefaultSearchHorizon = 3660;

class PropertyCalendar {
public:
    PropertyCalendar() = default;

    void define(const DayProperty& name, PropertyRule rule);
    bool knows(const DayProperty& name) const { return rules_.count(name) != 0; }
    const PropertyRule& rule(const DayProperty& name) const;  // throws UnknownProperty

    bool has_property(const Day& d, const DayProperty& name) const;

    // Days d with from <= d <= to carrying the property; empty range -> 0.
    std::int64_t count_days_with_property(const Day& from, const Day& to,
                                          const DayProperty& name) const;

    // Earliest day strictly after d with the property, scanning at most
    // `horizon` days ahead; throws NoSuchDayWithinHorizon when none exists.
    Day first_with_property_after(const Day& d, const DayProperty& name,
                                  std::int64_t horizon = kDefaultSearchHorizon) const;

    std::vector<DayProperty> property_names() const;  // ascending

private:
    std::map<DayProperty, PropertyRule> rules_;
};

}  // namespace cte
