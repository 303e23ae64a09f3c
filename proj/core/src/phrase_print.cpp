#include <sstream>

#include "cte/phrase.hpp"

namespace cte {
namespace {

const char* ordinal_word(int n) {
    switch (n) {
        case 1: return "first";
        case 2: return "second";
        case 3: return "third";
        case 4: return "fourth";
        default: return "fifth";
    }
}

struct Printer {
    std::string text(const PhraseAst& ast) const {
        return std::visit([&](const auto& node) { return print(node); }, ast.node);
    }
    std::string text(const PhrasePtr& p) const { return text(*p); }

    std::string print(const DateLiteralNode& n) const { return n.day.iso(); }
    std::string print(const NamedDateNode& n) const { return n.name; }
    std::string print(const SpecifiedDateNode& n) const {
        return "the date specified as " + n.name;
    }
    std::string print(const DesignatedDateNode& n) const {
        return "the date designated as " + n.name;
    }
    std::string print(const OccurrenceNode& n) const {
        return n.endpoint == EventEndpoint::Start ? "the occurrence of event " + n.event_id
                                                  : "the end of event " + n.event_id;
    }
    std::string print(const OffsetNode& n) const {
        std::string out = std::to_string(n.n);
        if (n.property) out += " " + *n.property;
        out += " days ";
        out += n.direction == OffsetDirection::After ? "after " : "before ";
        return out + text(n.anchor);
    }
    std::string print(const AtLeastOffsetNode& n) const {
        return "at least " + std::to_string(n.n) + " days " +
               (n.direction == OffsetDirection::After ? "after " : "before ") + text(n.anchor);
    }
    std::string print(const FirstWithPropertyNode& n) const {
        return "the first " + n.property + " after " + text(n.anchor);
    }
    std::string print(const WindowNode& n) const {
        if (n.lo == 1) {
            return "all days within " + std::to_string(n.hi) + " days after " + text(n.anchor);
        }
        return "all days from " + std::to_string(n.lo) + " to " + std::to_string(n.hi) +
               " days after " + text(n.anchor);
    }
    std::string print(const AllDaysBetweenNode& n) const {
        return "all days after event " + n.event_a + " and before event " + n.event_b;
    }
    std::string print(const EveryNthWeekdayNode& n) const {
        return std::string("every ") + ordinal_word(n.nth) + " " + to_string(n.weekday) +
               " of every month from " + text(n.from) + " to " + text(n.to);
    }
    std::string print(const WithEffectFromNode& n) const {
        std::string out = "with effect from " + text(n.anchor);
        if (n.mode == EffectMode::Continuous) {
            if (n.until) return out + " at all times until " + text(n.until);
            return out + " [continuous]";
        }
        out += " [discrete]";
        if (n.until) out += " until " + text(n.until);
        return out;
    }
    std::string print(const AtAllTimesUntilNode& n) const {
        return "at all times until " + text(n.until);
    }
    std::string print(const SoLongAsNode& n) const {
        return "for so long as event " + n.event_id;
    }
    std::string print(const MaintainNode& n) const {
        return "to maintain in full force and effect all " + n.subject;
    }
    std::string print(const OnOrAsSoonAsPracticableNode& n) const {
        return "on or as soon as reasonably practicable following " + text(n.anchor);
    }
    std::string print(const ReasonablenessAdverbNode& n) const {
        if (n.anchor) return n.adverb + " following " + text(n.anchor);
        return n.adverb;
    }
    std::string print(const UponReasonableDemandNode& n) const {
        return "upon reasonable demand of event " + n.event_id;
    }
    std::string print(const SurvivesNode&) const { return "will survive"; }
    std::string print(const NoticeWindowNode& n) const {
        switch (n.kind) {
            case PeriodKind::Notice:
                return "no more than " + std::to_string(n.n) + " days notice following event " +
                       n.event_id;
            case PeriodKind::Grace:
                return "a grace period of " + std::to_string(n.n) + " days following event " +
                       n.event_id;
            default:
                return "a waiting period of " + std::to_string(n.n) + " days following event " +
                       n.event_id;
        }
    }
    std::string print(const ComparisonNode& n) const {
        switch (n.op) {
            case ComparisonOp::PriorTo: return "prior to " + text(n.anchor);
            case ComparisonOp::Following: return "following " + text(n.anchor);
            case ComparisonOp::OnOrPriorTo: return "on or prior to " + text(n.anchor);
            case ComparisonOp::OnOrFollowing: return "on or following " + text(n.anchor);
            default: return "the same day as " + text(n.anchor);
        }
    }
    std::string print(const AlternativesNode& n) const {
        std::string out;
        for (std::size_t i = 0; i < n.options.size(); ++i) {
            if (i) out += " or ";
            out += text(n.options[i]);
        }
        return out;
    }
    std::string print(const ImmediatelyNode& n) const {
        return n.before ? "immediately before event " + n.event_id
                        : "immediately following event " + n.event_id;
    }
    std::string print(const OnAnyDayNode& n) const {
        std::string out = "on any day from " + text(n.from) + " to " + text(n.to);
        if (n.excluded_property) {
            out += " other than days with property " + *n.excluded_property;
        } else if (!n.excluded_days.empty()) {
            out += " other than ";
            for (std::size_t i = 0; i < n.excluded_days.size(); ++i) {
                if (i) out += " or ";
                out += text(n.excluded_days[i]);
            }
        }
        return out;
    }
    std::string print(const EventPhaseNode& n) const {
        switch (n.phase) {
            case PhraseEventPhase::HasOccurred: return "event " + n.event_id + " has occurred";
            case PhraseEventPhase::IsContinuing: return "event " + n.event_id + " is continuing";
            case PhraseEventPhase::HasCeased: return "event " + n.event_id + " has ceased";
            default: return "event " + n.event_id + " has occurred and is continuing";
        }
    }
    std::string print(const OccursPriorToNode& n) const {
        return "event " + n.event_a + " occurs prior to event " + n.event_b;
    }
    std::string print(const HasSatisfiedNode& n) const {
        return "party " + n.party + " has satisfied " + n.obligation_id;
    }
    std::string print(const HasTakenActionNode& n) const {
        return "party " + n.party + " has taken action " + n.action_event;
    }
    std::string print(const PotentialEventNode& n) const {
        return "a potential event of " + n.base;
    }
    std::string print(const DueDateOfNode& n) const {
        return "the due date of " + n.obligation_id;
    }
    std::string print(const LastPaymentDateNode& n) const {
        return "the last payment date of " + n.category + " read as " +
               (n.reading == LastPaymentReading::MostRecentDischarged
                    ? "most recently discharged"
                    : "latest due");
    }
    std::string print(const DeferredUntilNode& n) const {
        return "will be deferred to and will not be due until " + text(n.new_due);
    }
};

struct Explainer {
    std::string gloss(const PhraseAst& ast) const {
        return std::visit([&](const auto& node) { return explain_node(node); }, ast.node);
    }
    std::string gloss(const PhrasePtr& p) const { return gloss(*p); }

    std::string explain_node(const DateLiteralNode& n) const { return "the day " + n.day.iso(); }
    std::string explain_node(const NamedDateNode& n) const { return "the date named " + n.name; }
    std::string explain_node(const SpecifiedDateNode& n) const {
        return "the date the text specifies as " + n.name;
    }
    std::string explain_node(const DesignatedDateNode& n) const {
        return "the date designated during performance as " + n.name;
    }
    std::string explain_node(const OccurrenceNode& n) const {
        return n.endpoint == EventEndpoint::Start
                   ? "the day on which event " + n.event_id + " starts"
                   : "the day on which event " + n.event_id + " ends";
    }
    std::string explain_node(const OffsetNode& n) const {
        std::string what = n.property ? "the " + std::to_string(n.n) + "th " + *n.property
                                      : "the day " + std::to_string(n.n) + " days";
        return what + (n.direction == OffsetDirection::After ? " after " : " before ") +
               gloss(n.anchor);
    }
    std::string explain_node(const AtLeastOffsetNode& n) const {
        if (n.direction == OffsetDirection::After) {
            return "a date no earlier than " + std::to_string(n.n) + " days after " +
                   gloss(n.anchor);
        }
        return "a date no later than " + std::to_string(n.n) + " days before " + gloss(n.anchor);
    }
    std::string explain_node(const FirstWithPropertyNode& n) const {
        return "the earliest " + n.property + " strictly after " + gloss(n.anchor);
    }
    std::string explain_node(const WindowNode& n) const {
        if (n.hi < n.lo) return "an empty set of days";
        return "every day between " + std::to_string(n.lo) + " and " + std::to_string(n.hi) +
               " days after " + gloss(n.anchor);
    }
    std::string explain_node(const AllDaysBetweenNode& n) const {
        return "every day after event " + n.event_a + " ends and before event " + n.event_b +
               " starts";
    }
    std::string explain_node(const EveryNthWeekdayNode& n) const {
        std::string out = std::string("the ") + ordinal_word(n.nth) + " " + to_string(n.weekday) +
                          " of each month from " + gloss(n.from) + " to " + gloss(n.to);
        // With literal bounds the membership is already decided; spell it out.
        const auto* from = std::get_if<DateLiteralNode>(&n.from->node);
        const auto* to = std::get_if<DateLiteralNode>(&n.to->node);
        if (from && to && to->day >= from->day) {
            DateSet set = DateSet::from_rule(NthWeekdayGenerator{n.nth, n.weekday}, from->day,
                                             to->day);
            out += " (";
            for (std::size_t i = 0; i < set.members().size(); ++i) {
                if (i) out += ", ";
                out += set.members()[i].iso();
            }
            out += ")";
        }
        return out;
    }
    std::string explain_node(const WithEffectFromNode& n) const {
        std::string tail = n.until ? "until " + gloss(n.until) : "until the agreement ends";
        if (n.mode == EffectMode::Continuous) {
            return "the continuous period running from " + gloss(n.anchor) + " " + tail;
        }
        return "each day from " + gloss(n.anchor) + " " + tail;
    }
    std::string explain_node(const AtAllTimesUntilNode& n) const {
        return "the continuous period from the start of the agreement until " + gloss(n.until);
    }
    std::string explain_node(const SoLongAsNode& n) const {
        return "while event " + n.event_id + " is continuing";
    }
    std::string explain_node(const MaintainNode& n) const {
        return "at all times keeping every " + n.subject + " in full force and effect";
    }
    std::string explain_node(const OnOrAsSoonAsPracticableNode& n) const {
        return "on " + gloss(n.anchor) +
               " or as soon as reasonably practicable afterwards, within the configured window";
    }
    std::string explain_node(const ReasonablenessAdverbNode& n) const {
        std::string out = "within the configured \"" + n.adverb + "\" window";
        if (n.anchor) out += " following " + gloss(n.anchor);
        return out;
    }
    std::string explain_node(const UponReasonableDemandNode& n) const {
        return "when the demand (event " + n.event_id + ") is made, within a reasonable time";
    }
    std::string explain_node(const SurvivesNode&) const {
        return "a period that continues after the end of the agreement";
    }
    std::string explain_node(const NoticeWindowNode& n) const {
        std::string kind;
        switch (n.kind) {
            case PeriodKind::Notice: kind = "notice period"; break;
            case PeriodKind::Grace: kind = "grace period"; break;
            default: kind = "waiting period"; break;
        }
        return "a " + std::to_string(n.n) + "-day " + kind + " starting when event " +
               n.event_id + " ends";
    }
    std::string explain_node(const ComparisonNode& n) const {
        switch (n.op) {
            case ComparisonOp::PriorTo: return "any time before " + gloss(n.anchor);
            case ComparisonOp::Following: return "any time after " + gloss(n.anchor);
            case ComparisonOp::OnOrPriorTo: return "any time on or before " + gloss(n.anchor);
            case ComparisonOp::OnOrFollowing: return "any time on or after " + gloss(n.anchor);
            default: return "the same day as " + gloss(n.anchor);
        }
    }
    std::string explain_node(const AlternativesNode& n) const {
        std::string out = "one of ";
        for (std::size_t i = 0; i < n.options.size(); ++i) {
            if (i) out += " or ";
            out += gloss(n.options[i]);
        }
        return out + ", fixed only when performed";
    }
    std::string explain_node(const ImmediatelyNode& n) const {
        return n.before ? "the day before event " + n.event_id + " starts"
                        : "the day event " + n.event_id + " ends, or the next day";
    }
    std::string explain_node(const OnAnyDayNode& n) const {
        std::string out = "any day from " + gloss(n.from) + " to " + gloss(n.to);
        if (n.excluded_property) {
            out += ", other than days with property " + *n.excluded_property;
        } else if (!n.excluded_days.empty()) {
            out += ", other than ";
            for (std::size_t i = 0; i < n.excluded_days.size(); ++i) {
                if (i) out += " or ";
                out += gloss(n.excluded_days[i]);
            }
        }
        return out;
    }
    std::string explain_node(const EventPhaseNode& n) const {
        switch (n.phase) {
            case PhraseEventPhase::HasOccurred:
                return "event " + n.event_id + " has occurred";
            case PhraseEventPhase::IsContinuing:
                return "event " + n.event_id + " is continuing";
            case PhraseEventPhase::HasCeased:
                return "event " + n.event_id + " has ceased";
            default:
                return "event " + n.event_id + " has occurred and has not yet ceased";
        }
    }
    std::string explain_node(const OccursPriorToNode& n) const {
        return "event " + n.event_a + " ends before event " + n.event_b + " starts";
    }
    std::string explain_node(const HasSatisfiedNode& n) const {
        return "party " + n.party + " has discharged obligation " + n.obligation_id;
    }
    std::string explain_node(const HasTakenActionNode& n) const {
        return "party " + n.party + " has completed action " + n.action_event;
    }
    std::string explain_node(const PotentialEventNode& n) const {
        return "an event that may yet ripen into " + n.base;
    }
    std::string explain_node(const DueDateOfNode& n) const {
        return "the due date of obligation " + n.obligation_id;
    }
    std::string explain_node(const LastPaymentDateNode& n) const {
        return n.reading == LastPaymentReading::MostRecentDischarged
                   ? "the most recent discharged " + n.category + " date"
                   : "the latest due date among " + n.category + " obligations";
    }
    std::string explain_node(const DeferredUntilNode& n) const {
        return "the obligation is deferred and becomes due only on " + gloss(n.new_due);
    }
};

}  // namespace

std::string to_text(const PhraseAst& ast) { return Printer{}.text(ast); }

std::string explain(const PhraseAst& ast) { return Explainer{}.gloss(ast); }

}  // namespace cte
