#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cte/binding.hpp"
#include "cte/formula.hpp"
#include "cte/interval.hpp"
#include "cte/lifecycle.hpp"

namespace cte {

// A date given either directly or as a temporal phrase compiled at the
// moment the scenario needs it (so reasonableness windows apply).
struct DateSpec {
    std::variant<Day, DateBag, std::string> value;  // string = phrase text
};

struct BindingDecl {
    std::string name;
    DateSpec value;
    Day bound_at;
    std::string bound_by;
    std::string reason;
    std::set<std::string> properties;
};

struct EventDecl {
    std::string id;
    std::set<std::string> properties;
    std::optional<Day> start;  // pre-existing events may begin before replay
    std::optional<Day> end;
};

struct ObligationDecl {
    std::string id;
    std::string category;
    std::string obligor;
    std::string obligee;
    Day incurred_at;
    DateSpec due;
    std::optional<Day> end_date;
    bool survives = false;
    bool inferred = false;
};

struct RightDecl {
    std::string id;
    std::string holder;
    RightMode mode;
    bool survives = false;
};

struct RepetitionDecl {
    AtomInstance action;
    std::optional<std::int64_t> min_count;
    std::optional<std::int64_t> max_count;
    Day window_start;
    Day window_end;
};

// A formula that must NOT be realized anywhere inside the interval.
struct ProhibitionDecl {
    std::string id;
    std::string formula_text;
    ContinuousInterval interval;
};

// --- steps ---------------------------------------------------------------

struct DesignateDateStep {
    std::string name;
    DateSpec value;
    std::string party;
    std::string reason;
};
struct EventStartStep {
    std::string id;
};
struct EventEndStep {
    std::string id;
};
struct IncurObligationStep {
    ObligationDecl spec;  // incurred_at is the step day
};
struct DeferStep {
    std::string id;
    Day new_due;
    std::string reason;
};
struct AccelerateStep {
    std::string id;
    Day new_due;
    std::string reason;
};
struct DischargeStep {
    std::string id;
};
struct ActivateRightStep {
    std::string id;
    std::string trigger;
};
struct ExerciseRightStep {
    std::string id;
    std::size_t activation_index = 0;
};
struct RealizeAtomStep {
    AtomInstance atom;
};
struct ResolveBagStep {
    std::string name;  // a bound name or an obligation id with a bag due
    Day chosen;
    std::string reason;
};
struct QueryStep {
    std::string formula_text;
    std::optional<bool> expected;
};

using StepAction =
    std::variant<DesignateDateStep, EventStartStep, EventEndStep, IncurObligationStep, DeferStep,
                 AccelerateStep, DischargeStep, ActivateRightStep, ExerciseRightStep,
                 RealizeAtomStep, ResolveBagStep, QueryStep>;

struct Step {
    Day day;
    StepAction action;
};

struct Scenario {
    std::string id;
    std::string description;
    Span horizon;
    std::optional<std::string> calendar_ref;
    std::optional<ContinuousInterval> term;
    std::vector<BindingDecl> bindings;
    std::vector<EventDecl> events;
    std::vector<ObligationDecl> obligations;
    std::vector<RightDecl> rights;
    std::vector<RepetitionDecl> repetitions;
    std::vector<ProhibitionDecl> prohibitions;
    std::vector<Step> steps;  // non-decreasing by day
};

}  // namespace cte
