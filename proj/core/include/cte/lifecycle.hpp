#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cte/binding.hpp"
#include "cte/date_bag.hpp"
#include "cte/date_set.hpp"
#include "cte/day.hpp"
#include "cte/interval.hpp"
#include "cte/trace.hpp"
#include "cte/tristate.hpp"

namespace cte {

// ---------------------------------------------------------------------------
// Events

using ScheduledStart = std::variant<Day, DateSet, DateBag>;

struct Event {
    std::string id;
    std::set<std::string> properties;  // e.g. "EventOfDefault"
    std::optional<ScheduledStart> scheduled_start;
    std::optional<Day> actual_start;  // supersedes any scheduled possibility
    std::optional<Day> actual_end;
};

enum class EventPhaseKind { NotOccurred, Occurring, Ceased };

std::string to_string(EventPhaseKind k);

struct EventPhase {
    EventPhaseKind phase = EventPhaseKind::NotOccurred;
    bool has_occurred = false;   // actual start set and <= at
    bool is_continuing = false;  // occurred and no end yet (or end after at)
    bool has_ceased = false;     // actual end set and <= at
};

struct EventOrdering {
    TriState a_occurs_prior_to_b = TriState::Indeterminate;  // end(a) < start(b)
    std::optional<Day> immediately_before_a;                 // start(a) - 1
    std::optional<DateSet> immediately_after_a;              // {end(a), end(a)+1}
};

// ---------------------------------------------------------------------------
// Obligations

enum class RevisionKind { Deferral, Acceleration };

std::string to_string(RevisionKind k);

struct DueRevision {
    Day new_due;
    Day set_at;
    RevisionKind kind = RevisionKind::Deferral;
    std::string reason;
};

using DueDate = std::variant<Day, DateBag>;

struct Obligation {
    std::string id;
    std::string category;  // e.g. "Payment"; groups obligations for queries
    std::string obligor;
    std::string obligee;
    Day incurred_at;
    DueDate due;
    std::vector<DueRevision> revisions;  // ordered by set_at; last one wins
    std::optional<Day> end_date;         // automatic discharge at this day
    std::optional<Day> discharged_at;
    bool survives = false;
    bool inferred = false;  // e.g. an obligation to an external body
};

enum class ObligationStatus { Pending, Due, Overdue, DischargedOnTime, DischargedLate, AutoDischarged };

std::string to_string(ObligationStatus s);

// The due date after applying the whole revision history.
DueDate effective_due(const Obligation& ob);
// The due date as it stood on the given day (revisions set later ignored).
DueDate effective_due_at(const Obligation& ob, const Day& as_of);

// Status against the obligation's full history. Throws IndeterminateBag
// when an unresolved alternative-date due leaves the answer open.
ObligationStatus obligation_status(const Obligation& ob, const Day& at);

// ---------------------------------------------------------------------------
// Rights, powers and privileges

struct ContinuousRightMode {
    ContinuousInterval interval;
};
struct TriggeredRightMode {
    std::string trigger;  // event id or named date
};
using RightMode = std::variant<ContinuousRightMode, TriggeredRightMode>;

struct RightActivation {
    std::string trigger;
    Day activated_at;
    std::vector<Day> exercises;
};

struct Right {
    std::string id;
    std::string holder;
    RightMode mode;
    std::vector<RightActivation> activations;  // append-only, one per trigger occurrence
    bool survives = false;
};

struct RightState {
    bool active = false;
    std::vector<RightActivation> activations;
    // Per activation: days from activation to first exercise, if any.
    std::vector<std::optional<std::int64_t>> delays;
};

// ---------------------------------------------------------------------------
// Repetition constraints

struct RepetitionConstraint {
    AtomInstance action;
    std::optional<std::int64_t> min_count;
    std::optional<std::int64_t> max_count;
    DateSet window;
};

struct RepetitionCheck {
    std::int64_t count = 0;
    bool satisfied = false;
};

// ---------------------------------------------------------------------------
// Contract state

struct ContractState {
    Day as_of;  // only advances
    BindingRegistry registry;
    std::map<std::string, Event> events;
    std::map<std::string, Obligation> obligations;
    std::map<std::string, Right> rights;
    ContinuousInterval agreement_term;
};

struct ObligationSpec {
    std::string id;
    std::string category;
    std::string obligor;
    std::string obligee;
    Day incurred_at;
    DueDate due;
    std::optional<Day> end_date;
    bool survives = false;
    bool inferred = false;
};

// --- event operations -------------------------------------------------------

EventPhase event_phase(const ContractState& st, const std::string& event_id, const Day& at);
EventPhase event_phase(const Event& ev, const Day& at);

EventOrdering event_orderings(const Event& a, const Event& b);

// The day before the event's start ("immediately before"); MissingDate if unset.
Day immediately_before(const Event& ev);
// {end, end + 1}: the same day as, or the next day following, the end.
DateSet immediately_after(const Event& ev);

ContractState advance_to(ContractState st, const Day& day);
ContractState set_event_start(ContractState st, const std::string& event_id, const Day& day);
ContractState set_event_end(ContractState st, const std::string& event_id, const Day& day);

// --- obligation operations --------------------------------------------------

// Registers the obligation and materializes the incurring itself as a
// point event named "<id>.incurred".
std::pair<ContractState, std::string> incur_obligation(ContractState st, ObligationSpec spec);

ContractState defer_or_accelerate(ContractState st, const std::string& obligation_id,
                                  const Day& new_due, const Day& at, RevisionKind kind,
                                  std::string reason);
ContractState discharge(ContractState st, const std::string& obligation_id, const Day& at);

enum class LastPaymentReading { MostRecentDischarged, LatestDue };

std::string to_string(LastPaymentReading r);

Day last_payment_date(const ContractState& st, const std::string& category,
                      LastPaymentReading reading);

bool has_satisfied(const ContractState& st, const std::string& obligation_id, const Day& at);

// --- right operations --------------------------------------------------------

ContractState activate_right(ContractState st, const std::string& right_id, std::string trigger,
                             const Day& at);
ContractState exercise_right(ContractState st, const std::string& right_id,
                             std::size_t activation_index, const Day& at);
RightState right_state(const ContractState& st, const std::string& right_id, const Day& at);

// --- repetition and survival --------------------------------------------------

RepetitionCheck check_repetition(const Trace& trace, const RepetitionConstraint& c);

// The period over which the item has effect: the agreement term, extended
// past its end when the item survives termination.
ContinuousInterval survival_scope(const Obligation& ob, const ContinuousInterval& term,
                                  std::optional<TimePoint> post_term_end = std::nullopt);
ContinuousInterval survival_scope(const Right& r, const ContinuousInterval& term,
                                  std::optional<TimePoint> post_term_end = std::nullopt);

}  // namespace cte
