#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cte/day.hpp"
#include "cte/errors.hpp"
#include "cte/lifecycle.hpp"

namespace cte {

struct PhraseAst;
using PhrasePtr = std::shared_ptr<const PhraseAst>;

enum class OffsetDirection { After, Before };
enum class EffectMode { Continuous, Discrete };
enum class PeriodKind { Notice, Grace, Waiting };
enum class ComparisonOp { PriorTo, Following, OnOrPriorTo, OnOrFollowing, SameDayAs };
enum class EventEndpoint { Start, End };
enum class PhraseEventPhase { HasOccurred, IsContinuing, HasCeased, OccurredAndContinuing };

// --- productions -------------------------------------------------------------
// Anchors (the date-valued leaves) are themselves PhraseAst nodes, but the
// grammar only admits leaf productions in anchor position.

struct DateLiteralNode {
    Day day;
};
struct NamedDateNode {
    std::string name;
};
struct SpecifiedDateNode {  // "the date specified as X" (set in the text)
    std::string name;
};
struct DesignatedDateNode {  // "the date designated as X" (set in performance)
    std::string name;
};
struct OccurrenceNode {  // "the occurrence of event X" / "the end of event X"
    std::string event_id;
    EventEndpoint endpoint = EventEndpoint::Start;
};
struct OffsetNode {  // "5 days after X", "2 GeneralBusinessDay days after X"
    std::int64_t n = 0;
    OffsetDirection direction = OffsetDirection::After;
    std::optional<std::string> property;  // counting only days with this property
    PhrasePtr anchor;
};
struct AtLeastOffsetNode {  // "at least 5 days after X"
    std::int64_t n = 0;
    OffsetDirection direction = OffsetDirection::After;
    PhrasePtr anchor;
};
struct FirstWithPropertyNode {  // "the first GeneralBusinessDay after X"
    std::string property;
    PhrasePtr anchor;
};
struct WindowNode {  // "all days within 5 days after X"
    PhrasePtr anchor;
    std::int64_t lo = 1;
    std::int64_t hi = 0;
};
struct AllDaysBetweenNode {  // "all days after event X and before event Y"
    std::string event_a;
    std::string event_b;
};
struct EveryNthWeekdayNode {  // "every first Monday of every month from A to B"
    int nth = 1;
    Weekday weekday = Weekday::Monday;
    PhrasePtr from;
    PhrasePtr to;
};
struct WithEffectFromNode {
    PhrasePtr anchor;
    EffectMode mode = EffectMode::Continuous;
    PhrasePtr until;  // may be null: the agreement term bounds the period
};
struct AtAllTimesUntilNode {
    PhrasePtr until;
};
struct SoLongAsNode {  // "for so long as X": while the event continues
    std::string event_id;
};
struct MaintainNode {  // "to maintain in full force and effect all X"
    std::string subject;
};
struct OnOrAsSoonAsPracticableNode {  // "on or as soon as reasonably practicable following X"
    PhrasePtr anchor;
};
struct ReasonablenessAdverbNode {  // "promptly [following X]", "timely"
    std::string adverb;
    PhrasePtr anchor;  // may be null (bare adverb parses but cannot compile)
};
struct UponReasonableDemandNode {
    std::string event_id;
};
struct SurvivesNode {};  // "will survive"
struct NoticeWindowNode {  // "no more than 10 days notice following event X"
    std::int64_t n = 0;
    PeriodKind kind = PeriodKind::Notice;
    std::string event_id;
};
struct ComparisonNode {  // "prior to X", "following X", "the same day as X"
    ComparisonOp op = ComparisonOp::PriorTo;
    PhrasePtr anchor;
};
struct AlternativesNode {  // "A or B or C": a bag of alternative dates
    std::vector<PhrasePtr> options;
};
struct ImmediatelyNode {  // "immediately before event X" / "immediately following event X"
    bool before = true;
    std::string event_id;
};
struct OnAnyDayNode {  // "on any day from A to B other than ..."
    PhrasePtr from;
    PhrasePtr to;
    std::optional<std::string> excluded_property;
    std::vector<PhrasePtr> excluded_days;
};
struct EventPhaseNode {  // "event X has occurred and is continuing"
    std::string event_id;
    PhraseEventPhase phase = PhraseEventPhase::HasOccurred;
};
struct OccursPriorToNode {  // "event X occurs prior to event Y"
    std::string event_a;
    std::string event_b;
};
struct HasSatisfiedNode {  // "party A has satisfied O"
    std::string party;
    std::string obligation_id;
};
struct HasTakenActionNode {  // "party A has taken action X"
    std::string party;
    std::string action_event;
};
struct PotentialEventNode {  // "a potential event of Default"
    std::string base;
};
struct DueDateOfNode {  // "the due date of O"
    std::string obligation_id;
};
struct LastPaymentDateNode {  // "the last payment date of C read as ..."
    std::string category;
    LastPaymentReading reading = LastPaymentReading::MostRecentDischarged;
};
struct DeferredUntilNode {  // "deferred to and not due until X"
    PhrasePtr new_due;
};

using PhraseNode = std::variant<
    DateLiteralNode, NamedDateNode, SpecifiedDateNode, DesignatedDateNode, OccurrenceNode,
    OffsetNode, AtLeastOffsetNode, FirstWithPropertyNode, WindowNode, AllDaysBetweenNode,
    EveryNthWeekdayNode, WithEffectFromNode, AtAllTimesUntilNode, SoLongAsNode, MaintainNode,
    OnOrAsSoonAsPracticableNode, ReasonablenessAdverbNode, UponReasonableDemandNode, SurvivesNode,
    NoticeWindowNode, ComparisonNode, AlternativesNode, ImmediatelyNode, OnAnyDayNode,
    EventPhaseNode, OccursPriorToNode, HasSatisfiedNode, HasTakenActionNode, PotentialEventNode,
    DueDateOfNode, LastPaymentDateNode, DeferredUntilNode>;

struct PhraseAst {
    PhraseNode node;
};

template <typename Node>
PhrasePtr make_phrase(Node node) {
    return std::make_shared<const PhraseAst>(PhraseAst{PhraseNode{std::move(node)}});
}

// --- diagnostics --------------------------------------------------------------

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& message);
    std::size_t position() const { return position_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

// Bag-producing phrases nested inside a comparison ("prior to (X or Y)")
// have no settled reading; they are refused rather than guessed at.
class NestedAlternativeError : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

// "would occur" / "would have been": counterfactuals are routed to a human
// rather than modeled.
class CounterfactualError : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

// --- operations ---------------------------------------------------------------

PhrasePtr parse(std::string_view text);

// Canonical grammar spelling; parse(to_text(ast)) reproduces the tree.
std::string to_text(const PhraseAst& ast);
inline std::string to_text(const PhrasePtr& ast) { return to_text(*ast); }

// Deterministic English gloss, one clause per node, in source order.
std::string explain(const PhraseAst& ast);
inline std::string explain(const PhrasePtr& ast) { return explain(*ast); }

// Structural equality (via the canonical spelling, which is injective).
inline bool ast_equal(const PhraseAst& a, const PhraseAst& b) { return to_text(a) == to_text(b); }
inline bool ast_equal(const PhrasePtr& a, const PhrasePtr& b) { return ast_equal(*a, *b); }

}  // namespace cte
