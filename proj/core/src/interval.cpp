#include "cte/interval.hpp"

#include <algorithm>

namespace cte {

ContinuousInterval ContinuousInterval::between(TimePoint start, TimePoint end) {
    ContinuousInterval interval;
    interval.start_ = start;
    interval.end_ = end <= start ? start : end;
    return interval;
}

ContinuousInterval::Position ContinuousInterval::classify(const TimePoint& t) const {
    Position pos;
    pos.before_start = t <= start_;
    pos.after_end = t >= end_;
    pos.contains = !pos.before_start && !pos.after_end;
    return pos;
}

ContinuousInterval ContinuousInterval::intersect(const ContinuousInterval& other) const {
    const TimePoint lo = std::max(start_, other.start_);
    const TimePoint hi = std::min(end_, other.end_);
    return between(lo, hi);
}

std::string ContinuousInterval::to_string() const {
    return "(" + start_.to_string() + ", " + end_.to_string() + ")";
}

IntervalAggregate IntervalAggregate::of(std::vector<ContinuousInterval> intervals) {
    IntervalAggregate agg;
    intervals.erase(std::remove_if(intervals.begin(), intervals.end(),
                                   [](const ContinuousInterval& i) { return i.is_empty(); }),
                    intervals.end());
    std::sort(intervals.begin(), intervals.end(),
              [](const ContinuousInterval& a, const ContinuousInterval& b) {
                  if (a.start_point() != b.start_point()) return a.start_point() < b.start_point();
                  return a.end_point() < b.end_point();
              });
    for (const ContinuousInterval& next : intervals) {
        if (!agg.parts_.empty() && next.start_point() < agg.parts_.back().end_point()) {
            ContinuousInterval& last = agg.parts_.back();
            last = ContinuousInterval::between(last.start_point(),
                                               std::max(last.end_point(), next.end_point()));
        } else {
            agg.parts_.push_back(next);
        }
    }
    return agg;
}

bool IntervalAggregate::contains(const TimePoint& t) const {
    for (const ContinuousInterval& part : parts_) {
        if (part.contains(t)) return true;
    }
    return false;
}

}  // namespace cte
