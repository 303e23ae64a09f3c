#include "cte/calendar.hpp"

#include <algorithm>

namespace cte {

bool rule_matches(const PropertyRule& rule, const Day& d) {
    return std::visit(
        [&](const auto& r) -> bool {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ExplicitSetRule>) {
                return std::binary_search(r.days.begin(), r.days.end(), d);
            } else if constexpr (std::is_same_v<T, WeekdayRule>) {
                if (r.weekdays.count(d.weekday()) == 0) return false;
                return std::find(r.holidays.begin(), r.holidays.end(), d) == r.holidays.end();
            } else if constexpr (std::is_same_v<T, NthWeekdayRule>) {
                if (d.weekday() != r.weekday) return false;
                return (d.day_of_month() - 1) / 7 + 1 == r.nth;
            } else {
                return r.predicate && r.predicate(d);
            }
        },
        rule);
}

void PropertyCalendar::define(const DayProperty& name, PropertyRule rule) {
    if (auto* explicit_set = std::get_if<ExplicitSetRule>(&rule)) {
        std::sort(explicit_set->days.begin(), explicit_set->days.end());
        explicit_set->days.erase(
            std::unique(explicit_set->days.begin(), explicit_set->days.end()),
            explicit_set->days.end());
    }
    rules_[name] = std::move(rule);
}

const PropertyRule& PropertyCalendar::rule(const DayProperty& name) const {
    auto it = rules_.find(name);
    if (it == rules_.end()) throw UnknownProperty("no such day property: " + name);
    return it->second;
}

bool PropertyCalendar::has_property(const Day& d, const DayProperty& name) const {
    return rule_matches(rule(name), d);
}

std::int64_t PropertyCalendar::count_days_with_property(const Day& from, const Day& to,
                                                        const DayProperty& name) const {
    const PropertyRule& r = rule(name);
    std::int64_t count = 0;
    for (Day d = from; d <= to; d = d.plus_days(1)) {
        if (rule_matches(r, d)) ++count;
    }
    return count;
}

Day PropertyCalendar::first_with_property_after(const Day& d, const DayProperty& name,
                                                std::int64_t horizon) const {
    const PropertyRule& r = rule(name);
    for (std::int64_t i = 1; i <= horizon; ++i) {
        Day candidate = d.plus_days(i);
        if (rule_matches(r, candidate)) return candidate;
    }
    throw NoSuchDayWithinHorizon("no day with property " + name + " within " +
                                 std::to_string(horizon) + " days after " + d.iso());
}

std::vector<DayProperty> PropertyCalendar::property_names() const {
    std::vector<DayProperty> names;
    names.reserve(rules_.size());
    for (const auto& [name, rule] : rules_) names.push_back(name);
    return names;
}

}  // namespace cte
