#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "cte/calendar.hpp"
#include "cte/day.hpp"

namespace cte {

// Membership rules for rule-backed date sets.
struct ExplicitMembers {
    std::vector<Day> days;
};
struct FilteredRange {
    std::function<bool(const Day&)> predicate;  // keep d iff predicate(d)
    std::string label;
};
struct NthWeekdayGenerator {
    int nth = 1;  // e.g. "every first Monday of every month"
    Weekday weekday = Weekday::Monday;
};
struct RelativeWindowRule {
    Day anchor;
    std::int64_t offset_lo = 0;
    std::int64_t offset_hi = 0;  // member days: anchor+lo .. anchor+hi
};

using DateSetRule =
    std::variant<ExplicitMembers, FilteredRange, NthWeekdayGenerator, RelativeWindowRule>;

// Guard against runaway scans over generically defined rules.
inline constexpr std::int64_t kMaxGeneratorSpan = 36600;

// An ordered, duplicate-free collection of days inside declared inclusive
// bounds. The bounds are the declared range, not the first/last member;
// start == end with no members is the canonical empty set.
class DateSet {
public:
    DateSet() = default;

    static DateSet empty_at(const Day& at);
    // Materializes the rule's members within [start, end]. A span wider
    // than kMaxGeneratorSpan raises UnboundedGenerator; end < start gives
    // the canonical empty set.
    static DateSet from_rule(const DateSetRule& rule, const Day& start, const Day& end);
    // Explicit members with tightest bounds (empty input is rejected; use
    // empty_at for a canonical empty set).
    static DateSet of_days(std::vector<Day> days);

    Day start_day() const { return start_; }  // legal on the empty set
    Day end_day() const { return end_; }
    const std::vector<Day>& members() const { return members_; }  // ascending, unique
    bool is_empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }
    bool contains(const Day& d) const;

    DateSet union_with(const DateSet& other) const;
    DateSet intersect(const DateSet& other) const;
    // Identical member enumeration (bounds are not compared).
    bool same_members(const DateSet& other) const { return members_ == other.members_; }

    DateSet filtered(const std::function<bool(const Day&)>& keep) const;

    // Smallest member strictly greater than current; NoSucceedingDate when
    // every member is <= current.
    Day next_succeeding(const Day& current) const;

private:
    Day start_;
    Day end_;
    std::vector<Day> members_;
};

inline DateSet make_date_set(const DateSetRule& rule, const Day& start, const Day& end) {
    return DateSet::from_rule(rule, start, end);
}
inline DateSet set_filter(const DateSet& s, const std::function<bool(const Day&)>& keep) {
    return s.filtered(keep);
}
inline Day next_succeeding(const DateSet& s, const Day& current) {
    return s.next_succeeding(current);
}

}  // namespace cte
