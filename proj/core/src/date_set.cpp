#include "cte/date_set.hpp"

#include <algorithm>

#include "cte/errors.hpp"

namespace cte {

DateSet DateSet::empty_at(const Day& at) {
    DateSet s;
    s.start_ = at;
    s.end_ = at;
    return s;
}

DateSet DateSet::from_rule(const DateSetRule& rule, const Day& start, const Day& end) {
    if (end < start) return empty_at(start);
    if (end.days_since(start) > kMaxGeneratorSpan) {
        throw UnboundedGenerator("generator range " + start.iso() + ".." + end.iso() +
                                 " exceeds " + std::to_string(kMaxGeneratorSpan) + " days");
    }
    DateSet s;
    s.start_ = start;
    s.end_ = end;
    std::visit(
        [&](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ExplicitMembers>) {
                for (const Day& d : r.days) {
                    if (start <= d && d <= end) s.members_.push_back(d);
                }
                std::sort(s.members_.begin(), s.members_.end());
                s.members_.erase(std::unique(s.members_.begin(), s.members_.end()),
                                 s.members_.end());
            } else if constexpr (std::is_same_v<T, FilteredRange>) {
                for (Day d = start; d <= end; d = d.plus_days(1)) {
                    if (!r.predicate || r.predicate(d)) s.members_.push_back(d);
                }
            } else if constexpr (std::is_same_v<T, NthWeekdayGenerator>) {
                for (Day d = start; d <= end; d = d.plus_days(1)) {
                    if (d.weekday() == r.weekday && (d.day_of_month() - 1) / 7 + 1 == r.nth) {
                        s.members_.push_back(d);
                    }
                }
            } else {  // RelativeWindowRule
                for (std::int64_t o = r.offset_lo; o <= r.offset_hi; ++o) {
                    Day d = r.anchor.plus_days(o);
                    if (start <= d && d <= end) s.members_.push_back(d);
                }
            }
        },
        rule);
    return s;
}

DateSet DateSet::of_days(std::vector<Day> days) {
    if (days.empty()) {
        throw EmptyResult("of_days needs at least one day; use empty_at for an empty set");
    }
    std::sort(days.begin(), days.end());
    days.erase(std::unique(days.begin(), days.end()), days.end());
    DateSet s;
    s.start_ = days.front();
    s.end_ = days.back();
    s.members_ = std::move(days);
    return s;
}

bool DateSet::contains(const Day& d) const {
    return std::binary_search(members_.begin(), members_.end(), d);
}

DateSet DateSet::union_with(const DateSet& other) const {
    std::vector<Day> merged;
    merged.reserve(members_.size() + other.members_.size());
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(merged));
    if (merged.empty()) return empty_at(std::min(start_, other.start_));
    return of_days(std::move(merged));
}

DateSet DateSet::intersect(const DateSet& other) const {
    std::vector<Day> common;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(common));
    if (common.empty()) return empty_at(std::min(start_, other.start_));
    return of_days(std::move(common));
}

DateSet DateSet::filtered(const std::function<bool(const Day&)>& keep) const {
    DateSet s;
    s.start_ = start_;
    s.end_ = end_;
    for (const Day& d : members_) {
        if (keep(d)) s.members_.push_back(d);
    }
    return s;
}

Day DateSet::next_succeeding(const Day& current) const {
    auto it = std::upper_bound(members_.begin(), members_.end(), current);
    if (it == members_.end()) {
        throw NoSucceedingDate("no member succeeds " + current.iso());
    }
    return *it;
}

}  // namespace cte
