#include "cte/compile.hpp"

#include <sstream>

#include "cte/errors.hpp"
#include "cte/formula_text.hpp"

namespace cte {
namespace {

// Registry names under which the replay engine publishes lifecycle dates,
// so that phrases can refer to events and obligations by name.
std::string event_start_name(const std::string& id) { return id + ".start"; }
std::string event_end_name(const std::string& id) { return id + ".end"; }
std::string obligation_due_name(const std::string& id) { return id + ".due"; }
std::string last_payment_name(const std::string& category, LastPaymentReading reading) {
    return category + (reading == LastPaymentReading::MostRecentDischarged ? ".last_discharged"
                                                                           : ".latest_due");
}

struct Compiler {
    const CompileContext& ctx;

    const BindingRegistry& registry() const {
        static const BindingRegistry empty;
        return ctx.registry ? *ctx.registry : empty;
    }
    const PropertyCalendar& calendar() const {
        if (!ctx.calendar) throw UnknownProperty("no property calendar supplied");
        return *ctx.calendar;
    }
    const ReasonablenessConfig& config() const {
        static const ReasonablenessConfig defaults;
        return ctx.config ? *ctx.config : defaults;
    }

    // --- name resolution ------------------------------------------------

    std::variant<BoundValue, DeferredName> lookup(const std::string& name) const {
        auto designation = registry().designation(name);
        if (designation.current) return *designation.current;
        if (ctx.allow_deferred) return DeferredName{name};
        throw UnknownName("no binding for \"" + name + "\"");
    }

    // A Day-valued anchor. Bags must be resolved to stand in a day position.
    std::variant<Day, DeferredName> anchor_day(const PhraseAst& anchor) const {
        if (const auto* lit = std::get_if<DateLiteralNode>(&anchor.node)) return lit->day;
        if (const auto* named = std::get_if<NamedDateNode>(&anchor.node)) {
            return day_of(lookup(named->name));
        }
        if (const auto* spec = std::get_if<SpecifiedDateNode>(&anchor.node)) {
            auto designation = registry().designation(spec->name);
            if (!designation.is_specified) {
                if (ctx.allow_deferred) return DeferredName{spec->name};
                throw UnknownName("\"" + spec->name + "\" is not specified in the text");
            }
            return day_of(*designation.current);
        }
        if (const auto* desig = std::get_if<DesignatedDateNode>(&anchor.node)) {
            auto designation = registry().designation(desig->name);
            if (!designation.has_been_designated) {
                if (ctx.allow_deferred) return DeferredName{desig->name};
                throw UnknownName("\"" + desig->name + "\" has not been designated");
            }
            return day_of(*designation.current);
        }
        if (const auto* occ = std::get_if<OccurrenceNode>(&anchor.node)) {
            const std::string name = occ->endpoint == EventEndpoint::Start
                                         ? event_start_name(occ->event_id)
                                         : event_end_name(occ->event_id);
            return day_of(lookup(name));
        }
        throw UnknownName("phrase is not usable as a date anchor: " + to_text(anchor));
    }

    std::variant<Day, DeferredName> day_of(std::variant<BoundValue, DeferredName> v) const {
        if (auto* deferred = std::get_if<DeferredName>(&v)) return std::move(*deferred);
        return day_of(std::get<BoundValue>(v));
    }
    Day day_of(const BoundValue& v) const {
        if (const auto* day = std::get_if<Day>(&v)) return *day;
        return std::get<DateBag>(v).effective_day();  // IndeterminateBag when open
    }

    // Unwraps the frequent "Day or give up as deferred" pattern.
    template <typename Fn>
    CompiledValue with_day(const PhraseAst& anchor, Fn&& fn) const {
        auto v = anchor_day(anchor);
        if (auto* deferred = std::get_if<DeferredName>(&v)) return *deferred;
        return fn(std::get<Day>(v));
    }

    Day registry_day(const std::string& name) const {
        auto v = lookup(name);
        if (std::holds_alternative<DeferredName>(v)) {
            throw UnknownName("no binding for \"" + name + "\"");
        }
        return day_of(std::get<BoundValue>(v));
    }

    // --- per-node compilation --------------------------------------------

    CompiledValue compile_ast(const PhraseAst& ast) const {
        return std::visit([&](const auto& node) { return compile_node(node, ast); }, ast.node);
    }

    CompiledValue compile_node(const DateLiteralNode& n, const PhraseAst&) const { return n.day; }

    CompiledValue compile_node(const NamedDateNode& n, const PhraseAst&) const {
        auto v = lookup(n.name);
        if (auto* deferred = std::get_if<DeferredName>(&v)) return *deferred;
        const BoundValue& bound = std::get<BoundValue>(v);
        if (const auto* day = std::get_if<Day>(&bound)) return *day;
        return std::get<DateBag>(bound);
    }

    CompiledValue compile_node(const SpecifiedDateNode&, const PhraseAst& ast) const {
        return with_day(ast, [](Day d) -> CompiledValue { return d; });
    }
    CompiledValue compile_node(const DesignatedDateNode&, const PhraseAst& ast) const {
        return with_day(ast, [](Day d) -> CompiledValue { return d; });
    }
    CompiledValue compile_node(const OccurrenceNode&, const PhraseAst& ast) const {
        return with_day(ast, [](Day d) -> CompiledValue { return d; });
    }

    CompiledValue compile_node(const OffsetNode& n, const PhraseAst&) const {
        return with_day(*n.anchor, [&](Day base) -> CompiledValue {
            if (!n.property) {
                const std::int64_t delta = n.direction == OffsetDirection::After ? n.n : -n.n;
                return base.plus_days(delta);
            }
            // The n-th day carrying the property, counting away from the anchor.
            Day candidate = base;
            for (std::int64_t found = 0; found < n.n;) {
                candidate = candidate.plus_days(n.direction == OffsetDirection::After ? 1 : -1);
                if (base.days_since(candidate) > kDefaultSearchHorizon ||
                    candidate.days_since(base) > kDefaultSearchHorizon) {
                    throw NoSuchDayWithinHorizon("ran out of " + *n.property + " days near " +
                                                 base.iso());
                }
                if (calendar().has_property(candidate, *n.property)) ++found;
            }
            return candidate;
        });
    }

    CompiledValue compile_node(const AtLeastOffsetNode& n, const PhraseAst&) const {
        return with_day(*n.anchor, [&](Day base) -> CompiledValue {
            if (n.direction == OffsetDirection::After) {
                // Permits every day d with d >= base + n.
                return ContinuousInterval::between(TimePoint(base.plus_days(n.n - 1)),
                                                   TimePoint::pos_infinity());
            }
            return ContinuousInterval::between(TimePoint::neg_infinity(),
                                               TimePoint(base.plus_days(-(n.n - 1))));
        });
    }

    CompiledValue compile_node(const FirstWithPropertyNode& n, const PhraseAst&) const {
        return with_day(*n.anchor, [&](Day base) -> CompiledValue {
            return calendar().first_with_property_after(base, n.property);
        });
    }

    CompiledValue compile_node(const WindowNode& n, const PhraseAst&) const {
        return with_day(*n.anchor, [&](Day base) -> CompiledValue {
            if (n.hi < n.lo) return DateSet::empty_at(base.plus_days(n.lo));
            return DateSet::from_rule(RelativeWindowRule{base, n.lo, n.hi},
                                      base.plus_days(n.lo), base.plus_days(n.hi));
        });
    }

    CompiledValue compile_node(const AllDaysBetweenNode& n, const PhraseAst&) const {
        const Day end_a = registry_day(event_end_name(n.event_a));
        const Day start_b = registry_day(event_start_name(n.event_b));
        const Day from = end_a.plus_days(1);
        const Day to = start_b.plus_days(-1);
        if (to < from) return DateSet::empty_at(from);
        return DateSet::from_rule(FilteredRange{nullptr, "all"}, from, to);
    }

    CompiledValue compile_node(const EveryNthWeekdayNode& n, const PhraseAst&) const {
        return with_day(*n.from, [&](Day from) -> CompiledValue {
            return with_day(*n.to, [&](Day to) -> CompiledValue {
                return DateSet::from_rule(NthWeekdayGenerator{n.nth, n.weekday}, from, to);
            });
        });
    }

    CompiledValue compile_node(const WithEffectFromNode& n, const PhraseAst&) const {
        return with_day(*n.anchor, [&](Day from) -> CompiledValue {
            TimePoint until = ctx.term.end_point();
            if (n.until) {
                auto v = anchor_day(*n.until);
                if (auto* deferred = std::get_if<DeferredName>(&v)) return *deferred;
                until = TimePoint(std::get<Day>(v));
            }
            if (n.mode == EffectMode::Continuous) {
                // The period includes `from` itself: exclusive start one day earlier.
                return ContinuousInterval::between(TimePoint(from.plus_days(-1)), until);
            }
            if (!until.is_finite()) {
                throw UnboundedGenerator(
                    "a discrete period starting " + from.iso() +
                    " has no finite end; give an until date or bound the agreement term");
            }
            const Day last = until.day().plus_days(-1);  // "until" excludes the end day
            if (last < from) return DateSet::empty_at(from);
            return DateSet::from_rule(FilteredRange{nullptr, "all"}, from, last);
        });
    }

    CompiledValue compile_node(const AtAllTimesUntilNode& n, const PhraseAst&) const {
        return with_day(*n.until, [&](Day until) -> CompiledValue {
            return ContinuousInterval::between(ctx.term.start_point(), TimePoint(until));
        });
    }

    CompiledValue compile_node(const SoLongAsNode& n, const PhraseAst&) const {
        return Formula::atom("is_continuing", {n.event_id});
    }

    CompiledValue compile_node(const MaintainNode& n, const PhraseAst&) const {
        return Formula::atom("maintained", {n.subject});
    }

    CompiledValue compile_node(const OnOrAsSoonAsPracticableNode& n, const PhraseAst&) const {
        return with_day(*n.anchor, [&](Day base) -> CompiledValue {
            const std::int64_t w = config().window_for("as soon as reasonably practicable");
            std::vector<Day> alternatives;
            for (std::int64_t i = 0; i <= w; ++i) alternatives.push_back(base.plus_days(i));
            return DateBag::of(std::move(alternatives));
        });
    }

    CompiledValue compile_node(const ReasonablenessAdverbNode& n, const PhraseAst&) const {
        if (!n.anchor) {
            throw EmptyResult("the adverb \"" + n.adverb +
                              "\" needs an anchor (\"... following <date>\") to denote days");
        }
        return with_day(*n.anchor, [&](Day base) -> CompiledValue {
            const std::int64_t w = config().window_for(n.adverb);
            if (w == 0) {
                throw EmptyResult("a zero-day \"" + n.adverb +
                                  "\" window leaves no permissible day after " + base.iso());
            }
            std::vector<Day> alternatives;
            for (std::int64_t i = 1; i <= w; ++i) alternatives.push_back(base.plus_days(i));
            return DateBag::of(std::move(alternatives));
        });
    }

    CompiledValue compile_node(const UponReasonableDemandNode& n, const PhraseAst&) const {
        const Day demanded = registry_day(event_start_name(n.event_id));
        const std::int64_t w = config().window_for("upon reasonable demand");
        std::vector<Day> alternatives;
        for (std::int64_t i = 0; i <= w; ++i) alternatives.push_back(demanded.plus_days(i));
        return DateBag::of(std::move(alternatives));
    }

    CompiledValue compile_node(const SurvivesNode&, const PhraseAst&) const {
        return ContinuousInterval::between(ctx.term.start_point(), TimePoint::pos_infinity());
    }

    CompiledValue compile_node(const NoticeWindowNode& n, const PhraseAst&) const {
        const Day end = registry_day(event_end_name(n.event_id));
        return DateSet::from_rule(RelativeWindowRule{end, 0, n.n}, end, end.plus_days(n.n));
    }

    CompiledValue compile_node(const ComparisonNode& n, const PhraseAst&) const {
        return with_day(*n.anchor, [&](Day base) -> CompiledValue {
            switch (n.op) {
                case ComparisonOp::PriorTo:
                    return ContinuousInterval::between(TimePoint::neg_infinity(), TimePoint(base));
                case ComparisonOp::Following:
                    return ContinuousInterval::between(TimePoint(base), TimePoint::pos_infinity());
                case ComparisonOp::OnOrPriorTo:
                    return ContinuousInterval::between(TimePoint::neg_infinity(),
                                                       TimePoint(base.plus_days(1)));
                case ComparisonOp::OnOrFollowing:
                    return ContinuousInterval::between(TimePoint(base.plus_days(-1)),
                                                       TimePoint::pos_infinity());
                default:
                    return base;
            }
        });
    }

    CompiledValue compile_node(const AlternativesNode& n, const PhraseAst&) const {
        std::vector<Day> alternatives;
        for (const PhrasePtr& option : n.options) {
            // Each option must name a single day; a bag inside a bag is the
            // nested construction the grammar refuses.
            if (const auto* named = std::get_if<NamedDateNode>(&option->node)) {
                auto v = lookup(named->name);
                if (auto* deferred = std::get_if<DeferredName>(&v)) return *deferred;
                const BoundValue& bound = std::get<BoundValue>(v);
                if (std::holds_alternative<DateBag>(bound) &&
                    !std::get<DateBag>(bound).is_resolved()) {
                    throw NestedAlternativeError(
                        0, {"a single date"},
                        "\"" + named->name +
                            "\" is itself a bag of alternatives; nested alternatives have no "
                            "settled reading");
                }
                alternatives.push_back(day_of(bound));
                continue;
            }
            auto v = anchor_day(*option);
            if (auto* deferred = std::get_if<DeferredName>(&v)) return *deferred;
            alternatives.push_back(std::get<Day>(v));
        }
        return DateBag::of(std::move(alternatives));
    }

    CompiledValue compile_node(const ImmediatelyNode& n, const PhraseAst&) const {
        if (n.before) {
            const Day start = registry_day(event_start_name(n.event_id));
            return start.plus_days(-1);
        }
        const Day end = registry_day(event_end_name(n.event_id));
        return DateSet::of_days({end, end.plus_days(1)});
    }

    CompiledValue compile_node(const OnAnyDayNode& n, const PhraseAst&) const {
        return with_day(*n.from, [&](Day from) -> CompiledValue {
            return with_day(*n.to, [&](Day to) -> CompiledValue {
                std::vector<Day> excluded;
                for (const PhrasePtr& ex : n.excluded_days) {
                    auto v = anchor_day(*ex);
                    if (auto* deferred = std::get_if<DeferredName>(&v)) return *deferred;
                    excluded.push_back(std::get<Day>(v));
                }
                DateSet all = DateSet::from_rule(FilteredRange{nullptr, "all"}, from, to);
                return all.filtered([&](const Day& d) {
                    if (n.excluded_property && calendar().has_property(d, *n.excluded_property)) {
                        return false;
                    }
                    for (const Day& ex : excluded) {
                        if (ex == d) return false;
                    }
                    return true;
                });
            });
        });
    }

    CompiledValue compile_node(const EventPhaseNode& n, const PhraseAst&) const {
        switch (n.phase) {
            case PhraseEventPhase::HasOccurred:
                return Formula::atom("has_occurred", {n.event_id});
            case PhraseEventPhase::IsContinuing:
                return Formula::atom("is_continuing", {n.event_id});
            case PhraseEventPhase::HasCeased:
                return Formula::atom("has_ceased", {n.event_id});
            default:
                return Formula::conjunction(Formula::atom("has_occurred", {n.event_id}),
                                            Formula::atom("is_continuing", {n.event_id}));
        }
    }

    CompiledValue compile_node(const OccursPriorToNode& n, const PhraseAst&) const {
        const Day end_a = registry_day(event_end_name(n.event_a));
        const Day start_b = registry_day(event_start_name(n.event_b));
        return Formula::precedes(TimeExpr::literal(end_a), TimeExpr::literal(start_b));
    }

    CompiledValue compile_node(const HasSatisfiedNode& n, const PhraseAst&) const {
        return Formula::atom("has_satisfied", {n.obligation_id});
    }

    CompiledValue compile_node(const HasTakenActionNode& n, const PhraseAst&) const {
        // "has taken action X": the action-event has ended (same-day counts).
        return Formula::atom("has_ceased", {n.action_event});
    }

    CompiledValue compile_node(const PotentialEventNode& n, const PhraseAst&) const {
        // Potential events carry the "Potential<X>" property tag.
        return Formula::atom("has_occurred", {"Potential" + n.base});
    }

    CompiledValue compile_node(const DueDateOfNode& n, const PhraseAst&) const {
        auto v = lookup(obligation_due_name(n.obligation_id));
        if (auto* deferred = std::get_if<DeferredName>(&v)) return *deferred;
        const BoundValue& bound = std::get<BoundValue>(v);
        if (const auto* day = std::get_if<Day>(&bound)) return *day;
        return std::get<DateBag>(bound);
    }

    CompiledValue compile_node(const LastPaymentDateNode& n, const PhraseAst&) const {
        auto v = lookup(last_payment_name(n.category, n.reading));
        if (auto* deferred = std::get_if<DeferredName>(&v)) return *deferred;
        return day_of(std::get<BoundValue>(v));
    }

    CompiledValue compile_node(const DeferredUntilNode& n, const PhraseAst&) const {
        return with_day(*n.new_due, [](Day d) -> CompiledValue { return d; });
    }
};

}  // namespace

CompiledValue compile(const PhraseAst& ast, const CompileContext& ctx) {
    return Compiler{ctx}.compile_ast(ast);
}

std::string describe(const CompiledValue& value) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Day>) {
                return "day " + v.iso();
            } else if constexpr (std::is_same_v<T, ContinuousInterval>) {
                return "interval " + v.to_string();
            } else if constexpr (std::is_same_v<T, DateSet>) {
                std::string out = "set [" + v.start_day().iso() + ".." + v.end_day().iso() + "] {";
                for (std::size_t i = 0; i < v.members().size(); ++i) {
                    if (i) out += ", ";
                    out += v.members()[i].iso();
                }
                return out + "}";
            } else if constexpr (std::is_same_v<T, DateBag>) {
                std::string out = "bag {";
                for (std::size_t i = 0; i < v.alternatives().size(); ++i) {
                    if (i) out += ", ";
                    out += v.alternatives()[i].iso();
                }
                out += "}";
                if (v.is_resolved()) out += " resolved to " + v.resolution()->chosen.iso();
                return out;
            } else if constexpr (std::is_same_v<T, Formula>) {
                return "formula " + format_formula(v);
            } else {
                return "deferred on name \"" + v.name + "\"";
            }
        },
        value);
}

}  // namespace cte
