#include "cte/lifecycle.hpp"

#include <algorithm>

#include "cte/errors.hpp"

namespace cte {
namespace {

const Event& find_event(const ContractState& st, const std::string& id) {
    auto it = st.events.find(id);
    if (it == st.events.end()) throw UnknownEvent("no such event: " + id);
    return it->second;
}

Event& find_event(ContractState& st, const std::string& id) {
    auto it = st.events.find(id);
    if (it == st.events.end()) throw UnknownEvent("no such event: " + id);
    return it->second;
}

const Obligation& find_obligation(const ContractState& st, const std::string& id) {
    auto it = st.obligations.find(id);
    if (it == st.obligations.end()) throw UnknownObligation("no such obligation: " + id);
    return it->second;
}

Obligation& find_obligation(ContractState& st, const std::string& id) {
    auto it = st.obligations.find(id);
    if (it == st.obligations.end()) throw UnknownObligation("no such obligation: " + id);
    return it->second;
}

Right& find_right(ContractState& st, const std::string& id) {
    auto it = st.rights.find(id);
    if (it == st.rights.end()) throw UnknownRight("no such right: " + id);
    return it->second;
}

// Tri-state position of `at` against a due date that may still be a bag.
TriState due_relation(const DueDate& due, const Day& at, BagRelation rel) {
    if (const auto* day = std::get_if<Day>(&due)) {
        switch (rel) {
            case BagRelation::Before: return to_tristate(*day < at);
            case BagRelation::After: return to_tristate(*day > at);
            default: return to_tristate(*day == at);
        }
    }
    return std::get<DateBag>(due).compare(at, rel);
}

bool require_definite(TriState t, const std::string& what) {
    if (t == TriState::Indeterminate) {
        throw IndeterminateBag(what + " depends on an unresolved bag of alternative dates");
    }
    return t == TriState::True;
}

}  // namespace

std::string to_string(EventPhaseKind k) {
    switch (k) {
        case EventPhaseKind::NotOccurred: return "NotOccurred";
        case EventPhaseKind::Occurring: return "Occurring";
        default: return "Ceased";
    }
}

std::string to_string(RevisionKind k) {
    return k == RevisionKind::Deferral ? "Deferral" : "Acceleration";
}

std::string to_string(ObligationStatus s) {
    switch (s) {
        case ObligationStatus::Pending: return "Pending";
        case ObligationStatus::Due: return "Due";
        case ObligationStatus::Overdue: return "Overdue";
        case ObligationStatus::DischargedOnTime: return "DischargedOnTime";
        case ObligationStatus::DischargedLate: return "DischargedLate";
        default: return "AutoDischarged";
    }
}

std::string to_string(LastPaymentReading r) {
    return r == LastPaymentReading::MostRecentDischarged ? "MostRecentDischarged" : "LatestDue";
}

// --- events ------------------------------------------------------------------

EventPhase event_phase(const Event& ev, const Day& at) {
    EventPhase p;
    p.has_occurred = ev.actual_start && *ev.actual_start <= at;
    p.is_continuing = p.has_occurred && (!ev.actual_end || *ev.actual_end > at);
    p.has_ceased = ev.actual_end && *ev.actual_end <= at;
    if (p.is_continuing) {
        p.phase = EventPhaseKind::Occurring;
    } else if (p.has_ceased) {
        p.phase = EventPhaseKind::Ceased;
    } else {
        p.phase = EventPhaseKind::NotOccurred;
    }
    return p;
}

EventPhase event_phase(const ContractState& st, const std::string& event_id, const Day& at) {
    if (at > st.as_of) {
        throw FutureQuery("phase of " + event_id + " queried at " + at.iso() +
                          " but the state is only at " + st.as_of.iso());
    }
    return event_phase(find_event(st, event_id), at);
}

Day immediately_before(const Event& ev) {
    if (!ev.actual_start) throw MissingDate("event " + ev.id + " has no start date");
    return ev.actual_start->plus_days(-1);
}

DateSet immediately_after(const Event& ev) {
    if (!ev.actual_end) throw MissingDate("event " + ev.id + " has no end date");
    return DateSet::of_days({*ev.actual_end, ev.actual_end->plus_days(1)});
}

EventOrdering event_orderings(const Event& a, const Event& b) {
    EventOrdering out;
    if (a.actual_end && b.actual_start) {
        out.a_occurs_prior_to_b = to_tristate(*a.actual_end < *b.actual_start);
    }
    if (a.actual_start) out.immediately_before_a = a.actual_start->plus_days(-1);
    if (a.actual_end) out.immediately_after_a = immediately_after(a);
    return out;
}

ContractState advance_to(ContractState st, const Day& day) {
    if (day < st.as_of) {
        throw FutureQuery("contract time may only advance: " + day.iso() + " < " +
                          st.as_of.iso());
    }
    st.as_of = day;
    return st;
}

ContractState set_event_start(ContractState st, const std::string& event_id, const Day& day) {
    Event& ev = find_event(st, event_id);
    if (ev.actual_start) {
        throw EventDateAlreadySet("event " + event_id + " already started on " +
                                  ev.actual_start->iso());
    }
    ev.actual_start = day;
    ev.scheduled_start.reset();  // the actual start supersedes the possibilities
    return st;
}

ContractState set_event_end(ContractState st, const std::string& event_id, const Day& day) {
    Event& ev = find_event(st, event_id);
    if (!ev.actual_start) throw MissingDate("event " + event_id + " has not started");
    if (ev.actual_end) {
        throw EventDateAlreadySet("event " + event_id + " already ended on " +
                                  ev.actual_end->iso());
    }
    if (day < *ev.actual_start) {
        throw InvalidDate("event " + event_id + " cannot end before it starts");
    }
    ev.actual_end = day;
    return st;
}

// --- obligations --------------------------------------------------------------

DueDate effective_due(const Obligation& ob) {
    if (!ob.revisions.empty()) return ob.revisions.back().new_due;
    return ob.due;
}

DueDate effective_due_at(const Obligation& ob, const Day& as_of) {
    DueDate result = ob.due;
    for (const DueRevision& rev : ob.revisions) {
        if (rev.set_at <= as_of) result = rev.new_due;
    }
    return result;
}

ObligationStatus obligation_status(const Obligation& ob, const Day& at) {
    const DueDate due = effective_due(ob);
    if (ob.discharged_at && *ob.discharged_at <= at) {
        const bool late =
            require_definite(due_relation(due, *ob.discharged_at, BagRelation::Before),
                             "lateness of " + ob.id);
        return late ? ObligationStatus::DischargedLate : ObligationStatus::DischargedOnTime;
    }
    if (ob.end_date && at >= *ob.end_date) return ObligationStatus::AutoDischarged;
    if (require_definite(due_relation(due, at, BagRelation::After), "status of " + ob.id)) {
        return ObligationStatus::Pending;
    }
    if (require_definite(due_relation(due, at, BagRelation::Same), "status of " + ob.id)) {
        return ObligationStatus::Due;
    }
    return ObligationStatus::Overdue;
}

std::pair<ContractState, std::string> incur_obligation(ContractState st, ObligationSpec spec) {
    if (st.obligations.count(spec.id) != 0) {
        throw ScenarioError("obligation id already in use: " + spec.id);
    }
    if (const auto* due_day = std::get_if<Day>(&spec.due)) {
        if (*due_day < spec.incurred_at) {
            throw DueDateBeforeIncurred("obligation " + spec.id + " due " + due_day->iso() +
                                        " before it is incurred on " + spec.incurred_at.iso());
        }
    } else if (std::get<DateBag>(spec.due).compare(spec.incurred_at, BagRelation::Before) ==
               TriState::True) {
        throw DueDateBeforeIncurred("obligation " + spec.id +
                                    " is due before it is incurred on every alternative date");
    }
    Obligation ob;
    ob.id = spec.id;
    ob.category = spec.category;
    ob.obligor = spec.obligor;
    ob.obligee = spec.obligee;
    ob.incurred_at = spec.incurred_at;
    ob.due = std::move(spec.due);
    ob.end_date = spec.end_date;
    ob.survives = spec.survives;
    ob.inferred = spec.inferred;
    const std::string id = ob.id;
    st.obligations.emplace(id, std::move(ob));

    // The incurring itself is an event: a point action with equal start
    // and end dates.
    Event incurred;
    incurred.id = id + ".incurred";
    incurred.properties.insert("ObligationIncurred");
    incurred.actual_start = spec.incurred_at;
    incurred.actual_end = spec.incurred_at;
    st.events.emplace(incurred.id, std::move(incurred));
    return {std::move(st), id};
}

ContractState defer_or_accelerate(ContractState st, const std::string& obligation_id,
                                  const Day& new_due, const Day& at, RevisionKind kind,
                                  std::string reason) {
    if (at > st.as_of) {
        throw FutureQuery("due-date revision at " + at.iso() + " lies after the state's time " +
                          st.as_of.iso());
    }
    Obligation& ob = find_obligation(st, obligation_id);
    if (ob.discharged_at) {
        throw AlreadyDischarged("obligation " + obligation_id + " was discharged on " +
                                ob.discharged_at->iso());
    }
    if (new_due < ob.incurred_at) {
        throw DueDateBeforeIncurred("cannot move the due date of " + obligation_id +
                                    " before it was incurred (" + ob.incurred_at.iso() + ")");
    }
    if (!ob.revisions.empty() && at < ob.revisions.back().set_at) {
        throw NonMonotonicRevision("revision at " + at.iso() + " predates the last revision at " +
                                   ob.revisions.back().set_at.iso());
    }
    ob.revisions.push_back(DueRevision{new_due, at, kind, std::move(reason)});
    return st;
}

ContractState discharge(ContractState st, const std::string& obligation_id, const Day& at) {
    Obligation& ob = find_obligation(st, obligation_id);
    if (ob.discharged_at) {
        throw AlreadyDischarged("obligation " + obligation_id + " was already discharged on " +
                                ob.discharged_at->iso());
    }
    if (ob.end_date && at >= *ob.end_date) {
        throw AlreadyDischarged("obligation " + obligation_id +
                                " was automatically discharged at its end date " +
                                ob.end_date->iso());
    }
    ob.discharged_at = at;
    return st;
}

Day last_payment_date(const ContractState& st, const std::string& category,
                      LastPaymentReading reading) {
    std::optional<Day> best;
    for (const auto& [id, ob] : st.obligations) {
        if (ob.category != category) continue;
        if (reading == LastPaymentReading::MostRecentDischarged) {
            if (ob.discharged_at && *ob.discharged_at <= st.as_of) {
                if (!best || *ob.discharged_at > *best) best = *ob.discharged_at;
            }
        } else {
            const DueDate due = effective_due(ob);
            if (const auto* day = std::get_if<Day>(&due)) {
                if (!best || *day > *best) best = *day;
            } else {
                Day chosen = std::get<DateBag>(due).effective_day();
                if (!best || chosen > *best) best = chosen;
            }
        }
    }
    if (!best) {
        throw NoQualifyingObligation("no " + category + " obligation qualifies under the " +
                                     to_string(reading) + " reading");
    }
    return *best;
}

bool has_satisfied(const ContractState& st, const std::string& obligation_id, const Day& at) {
    const Obligation& ob = find_obligation(st, obligation_id);
    // Satisfaction counts from the discharge day itself.
    return ob.discharged_at && *ob.discharged_at <= at;
}

// --- rights --------------------------------------------------------------------

ContractState activate_right(ContractState st, const std::string& right_id, std::string trigger,
                             const Day& at) {
    Right& r = find_right(st, right_id);
    r.activations.push_back(RightActivation{std::move(trigger), at, {}});
    return st;
}

ContractState exercise_right(ContractState st, const std::string& right_id,
                             std::size_t activation_index, const Day& at) {
    Right& r = find_right(st, right_id);
    if (activation_index >= r.activations.size()) {
        throw NotActivated("right " + right_id + " has no activation #" +
                           std::to_string(activation_index));
    }
    RightActivation& act = r.activations[activation_index];
    if (at < act.activated_at) {
        throw NotActivated("right " + right_id + " activation #" +
                           std::to_string(activation_index) + " starts only on " +
                           act.activated_at.iso());
    }
    act.exercises.push_back(at);
    return st;
}

RightState right_state(const ContractState& st, const std::string& right_id, const Day& at) {
    auto it = st.rights.find(right_id);
    if (it == st.rights.end()) throw UnknownRight("no such right: " + right_id);
    const Right& r = it->second;

    RightState out;
    out.activations = r.activations;
    if (const auto* continuous = std::get_if<ContinuousRightMode>(&r.mode)) {
        out.active = continuous->interval.contains(TimePoint(at));
    } else {
        for (const RightActivation& act : r.activations) {
            if (act.activated_at <= at) {
                out.active = true;
                break;
            }
        }
    }
    for (const RightActivation& act : r.activations) {
        if (act.exercises.empty()) {
            out.delays.push_back(std::nullopt);
        } else {
            const Day first = *std::min_element(act.exercises.begin(), act.exercises.end());
            out.delays.push_back(first.days_since(act.activated_at));
        }
    }
    return out;
}

// --- repetition and survival -----------------------------------------------------

RepetitionCheck check_repetition(const Trace& trace, const RepetitionConstraint& c) {
    RepetitionCheck out;
    for (const Day& d : c.window.members()) {
        if (trace.realized(c.action, d)) ++out.count;  // OutOfHorizon if window leaks
    }
    out.satisfied = (!c.min_count || out.count >= *c.min_count) &&
                    (!c.max_count || out.count <= *c.max_count);
    return out;
}

namespace {
ContinuousInterval scope_of(bool survives, const ContinuousInterval& term,
                            const std::optional<TimePoint>& post_term_end) {
    if (!survives) return term;
    const TimePoint end = post_term_end.value_or(TimePoint::pos_infinity());
    return ContinuousInterval::between(term.start_point(), end);
}
}  // namespace

ContinuousInterval survival_scope(const Obligation& ob, const ContinuousInterval& term,
                                  std::optional<TimePoint> post_term_end) {
    return scope_of(ob.survives, term, post_term_end);
}

ContinuousInterval survival_scope(const Right& r, const ContinuousInterval& term,
                                  std::optional<TimePoint> post_term_end) {
    return scope_of(r.survives, term, post_term_end);
}

}  // namespace cte
