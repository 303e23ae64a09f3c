#pragma once

#include <string>
#include <vector>

#include "cte/day.hpp"

namespace cte {

// A continuous time range whose endpoints lie outside the range:
// contains(t) iff start < t < end. Equal endpoints give the empty
// interval, and requesting the endpoints of an empty interval is legal.
class ContinuousInterval {
public:
    ContinuousInterval() : start_(TimePoint::neg_infinity()), end_(TimePoint::neg_infinity()) {}

    // end <= start normalizes to the canonical empty interval (start, start).
    static ContinuousInterval between(TimePoint start, TimePoint end);

    TimePoint start_point() const { return start_; }
    TimePoint end_point() const { return end_; }
    bool is_empty() const { return start_ == end_; }

    bool contains(const TimePoint& t) const { return start_ < t && t < end_; }

    struct Position {
        bool contains = false;
        bool before_start = false;  // t <= start
        bool after_end = false;     // t >= end
    };
    Position classify(const TimePoint& t) const;

    ContinuousInterval intersect(const ContinuousInterval& other) const;

    std::string to_string() const;  // "(start, end)"
    bool operator==(const ContinuousInterval&) const = default;

private:
    TimePoint start_;
    TimePoint end_;
};

inline ContinuousInterval make_interval(TimePoint start, TimePoint end) {
    return ContinuousInterval::between(start, end);
}

inline ContinuousInterval interval_intersect(const ContinuousInterval& a,
                                             const ContinuousInterval& b) {
    return a.intersect(b);
}

inline ContinuousInterval::Position interval_predicates(const ContinuousInterval& i,
                                                        const TimePoint& t) {
    return i.classify(t);
}

// A union of intervals kept as sorted, pairwise disjoint parts. Inputs are
// merged whenever their day memberships form one contiguous block: with
// exclusive endpoints at day granularity that is next.start < current.end.
class IntervalAggregate {
public:
    IntervalAggregate() = default;
    static IntervalAggregate of(std::vector<ContinuousInterval> intervals);

    const std::vector<ContinuousInterval>& parts() const { return parts_; }
    bool contains(const TimePoint& t) const;
    bool empty() const { return parts_.empty(); }

private:
    std::vector<ContinuousInterval> parts_;
};

inline IntervalAggregate aggregate(std::vector<ContinuousInterval> intervals) {
    return IntervalAggregate::of(std::move(intervals));
}

}  // namespace cte
