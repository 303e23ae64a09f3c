#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cte/eval.hpp"
#include "cte/json_io.hpp"
#include "cte/lifecycle.hpp"
#include "cte/reasonableness.hpp"
#include "cte/scenario.hpp"
#include "cte/trace.hpp"
#include "cte/tristate.hpp"

namespace cte {

enum class ViolationKind {
    Overdue,
    SanctionLate,
    ProhibitionBreach,
    RepetitionBreach,
    QueryMismatch,
    HumanInputRequired
};

std::string to_string(ViolationKind k);

struct Violation {
    Day day;
    ViolationKind kind;
    std::string subject;
    std::string detail;
};

struct QueryOutcome {
    Day day;
    std::string formula;
    TriState result = TriState::Indeterminate;
    std::optional<bool> expected;
    bool matched = true;
    bool human_input = false;
    Transcript transcript;
};

struct Report {
    std::string scenario_id;
    std::vector<Violation> violations;
    std::vector<QueryOutcome> queries;
    ContractState final_state;
    std::map<AtomInstance, std::set<Day>> raw_atoms;
};

// Replays the scenario's steps in day order, re-evaluating obligation
// statuses, prohibitions, repetition bounds and queries along the way.
// The report is a pure function of (scenario, calendar, config).
Report replay(const Scenario& sc, const PropertyCalendar& cal, const ReasonablenessConfig& cfg);

// The realization trace implied by a contract state: lifecycle phases are
// materialized densely under their query-surface names (has_occurred,
// is_continuing, is_overdue, ...) next to the raw recorded atoms.
Trace materialize_trace(const ContractState& st, const Span& horizon,
                        const std::map<AtomInstance, std::set<Day>>& raw_atoms, const Day& up_to);

// Evaluates a textual formula at the given day. Unresolved-bag positions
// yield Indeterminate rather than an error.
TriState query(const Trace& trace, const Day& day, const std::string& formula_text,
               Transcript* transcript = nullptr);

Json report_to_json(const Report& report);
std::string report_to_text(const Report& report);

}  // namespace cte
