#include "cte/trace.hpp"

#include "cte/errors.hpp"

namespace cte {

Trace::Trace(Span horizon) : horizon_(horizon) {
    if (horizon.is_empty() || !horizon.is_finite()) {
        throw OutOfHorizon("a trace horizon must be a non-empty finite span, got " +
                           horizon.to_string());
    }
}

void Trace::record(AtomInstance atom, const Day& day) {
    ensure_in_horizon(day);
    facts_[std::move(atom)].insert(day);
}

void Trace::record_open(AtomInstance atom, const Day& day) {
    ensure_in_horizon(day);
    open_[std::move(atom)].insert(day);
}

bool Trace::realized(const AtomInstance& atom, const Day& day) const {
    ensure_in_horizon(day);
    auto open = open_.find(atom);
    if (open != open_.end() && open->second.count(day) != 0) {
        throw IndeterminateBag("whether " + atom.key() + " holds on " + day.iso() +
                               " hinges on an unresolved bag of alternative dates");
    }
    auto it = facts_.find(atom);
    return it != facts_.end() && it->second.count(day) != 0;
}

void Trace::ensure_in_horizon(const Day& day) const {
    if (!horizon_.covers(day)) {
        throw OutOfHorizon(day.iso() + " lies outside the trace horizon " +
                           horizon_.to_string());
    }
}

}  // namespace cte
