#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cte/day.hpp"
#include "cte/tristate.hpp"

namespace cte {

enum class BagRelation { Before, After, Same };

struct BagResolution {
    Day chosen;
    Day resolved_at;
    std::string reason;
    bool operator==(const BagResolution&) const = default;
};

// A multiset of alternative days standing in for a single date whose value
// is fixed only during performance. Until resolution, comparisons are
// three-valued: definite only when every alternative agrees.
class DateBag {
public:
    DateBag() = default;
    static DateBag of(std::vector<Day> alternatives);

    const std::vector<Day>& alternatives() const { return alternatives_; }  // ascending
    bool empty() const { return alternatives_.empty(); }
    std::size_t size() const { return alternatives_.size(); }

    bool is_resolved() const { return resolution_.has_value(); }
    const std::optional<BagResolution>& resolution() const { return resolution_; }

    // Picks one alternative; the choice is permanent.
    DateBag resolve(const Day& chosen, const Day& resolved_at, std::string reason) const;

    // The chosen day of a resolved bag; throws IndeterminateBag otherwise.
    Day effective_day() const;

    // Resolved bags compare as their chosen day. Unresolved bags answer
    // True/False only when every alternative agrees.
    TriState compare(const Day& t, BagRelation rel) const;

    // Multiset union; duplicates are preserved. Defined on unresolved bags.
    DateBag unite(const DateBag& other) const;
    // Multiset intersection (minimum multiplicities).
    DateBag intersect(const DateBag& other) const;
    // Equality on multiplicities, ignoring resolution state.
    bool equal_multiset(const DateBag& other) const;

    bool operator==(const DateBag&) const = default;

private:
    std::vector<Day> alternatives_;
    std::optional<BagResolution> resolution_;
};

inline DateBag make_bag(std::vector<Day> alternatives) { return DateBag::of(std::move(alternatives)); }

inline TriState bag_compare(const DateBag& b, const Day& t, BagRelation rel) {
    return b.compare(t, rel);
}

}  // namespace cte
