#include "cte/date_bag.hpp"

#include <algorithm>

#include "cte/errors.hpp"

namespace cte {
namespace {

bool relation_holds(const Day& candidate, const Day& t, BagRelation rel) {
    switch (rel) {
        case BagRelation::Before: return candidate < t;
        case BagRelation::After: return candidate > t;
        default: return candidate == t;
    }
}

}  // namespace

DateBag DateBag::of(std::vector<Day> alternatives) {
    DateBag bag;
    std::sort(alternatives.begin(), alternatives.end());
    bag.alternatives_ = std::move(alternatives);
    return bag;
}

DateBag DateBag::resolve(const Day& chosen, const Day& resolved_at, std::string reason) const {
    if (resolution_) {
        throw AlreadyResolved("bag already resolved to " + resolution_->chosen.iso());
    }
    if (!std::binary_search(alternatives_.begin(), alternatives_.end(), chosen)) {
        throw NotAnAlternative(chosen.iso() + " is not among the bag's alternatives");
    }
    DateBag resolved = *this;
    resolved.resolution_ = BagResolution{chosen, resolved_at, std::move(reason)};
    return resolved;
}

Day DateBag::effective_day() const {
    if (alternatives_.size() == 1) return alternatives_.front();
    if (!resolution_) {
        throw IndeterminateBag("bag of " + std::to_string(alternatives_.size()) +
                               " alternatives has not been resolved");
    }
    return resolution_->chosen;
}

TriState DateBag::compare(const Day& t, BagRelation rel) const {
    if (resolution_) return to_tristate(relation_holds(resolution_->chosen, t, rel));
    if (alternatives_.empty()) return TriState::Indeterminate;
    bool all = true, none = true;
    for (const Day& alt : alternatives_) {
        if (relation_holds(alt, t, rel)) {
            none = false;
        } else {
            all = false;
        }
    }
    if (all) return TriState::True;
    if (none) return TriState::False;
    return TriState::Indeterminate;
}

DateBag DateBag::unite(const DateBag& other) const {
    if (resolution_ || other.resolution_) {
        throw AlreadyResolved("bag algebra is defined on unresolved bags");
    }
    std::vector<Day> merged;
    merged.reserve(alternatives_.size() + other.alternatives_.size());
    std::merge(alternatives_.begin(), alternatives_.end(), other.alternatives_.begin(),
               other.alternatives_.end(), std::back_inserter(merged));
    return DateBag::of(std::move(merged));
}

DateBag DateBag::intersect(const DateBag& other) const {
    if (resolution_ || other.resolution_) {
        throw AlreadyResolved("bag algebra is defined on unresolved bags");
    }
    std::vector<Day> common;
    std::set_intersection(alternatives_.begin(), alternatives_.end(), other.alternatives_.begin(),
                          other.alternatives_.end(), std::back_inserter(common));
    return DateBag::of(std::move(common));
}

bool DateBag::equal_multiset(const DateBag& other) const {
    return alternatives_ == other.alternatives_;
}

}  // namespace cte
