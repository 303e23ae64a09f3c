#pragma once

#include <map>
#include <set>

#include "cte/day.hpp"
#include "cte/formula.hpp"

namespace cte {

// The model formulas are decided against: for each atom, the days within
// the horizon on which it is realized. Atoms absent from the map are
// realized nowhere (closed world within the horizon); queries outside the
// horizon are errors, not falsehoods.
class Trace {
public:
    explicit Trace(Span horizon);

    const Span& horizon() const { return horizon_; }

    // Build-phase mutation; traces are shared read-only afterwards.
    void record(AtomInstance atom, const Day& day);
    // Marks a cell whose truth hinges on an unresolved bag of alternative
    // dates: reading it raises IndeterminateBag instead of defaulting false.
    void record_open(AtomInstance atom, const Day& day);

    bool realized(const AtomInstance& atom, const Day& day) const;
    void ensure_in_horizon(const Day& day) const;

    const std::map<AtomInstance, std::set<Day>>& facts() const { return facts_; }

private:
    Span horizon_;
    std::map<AtomInstance, std::set<Day>> facts_;
    std::map<AtomInstance, std::set<Day>> open_;
};

}  // namespace cte
