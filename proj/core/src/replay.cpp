#include "cte/replay.hpp"

#include <algorithm>
#include <sstream>

#include "cte/compile.hpp"
#include "cte/errors.hpp"
#include "cte/formula_text.hpp"
#include "cte/phrase.hpp"

namespace cte {
namespace {

TriState due_compare(const DueDate& due, const Day& at, BagRelation rel) {
    if (const auto* day = std::get_if<Day>(&due)) {
        switch (rel) {
            case BagRelation::Before: return to_tristate(*day < at);
            case BagRelation::After: return to_tristate(*day > at);
            default: return to_tristate(*day == at);
        }
    }
    return std::get<DateBag>(due).compare(at, rel);
}

std::string due_text(const DueDate& due) {
    if (const auto* day = std::get_if<Day>(&due)) return day->iso();
    const DateBag& bag = std::get<DateBag>(due);
    if (bag.is_resolved()) return bag.resolution()->chosen.iso();
    std::string out = "{";
    for (std::size_t i = 0; i < bag.alternatives().size(); ++i) {
        if (i) out += ", ";
        out += bag.alternatives()[i].iso();
    }
    return out + "}";
}

struct ReplayEngine {
    const Scenario& sc;
    const PropertyCalendar& cal;
    const ReasonablenessConfig& cfg;

    ContractState st;
    std::map<AtomInstance, std::set<Day>> raw_atoms;
    std::vector<Violation> violations;
    std::vector<QueryOutcome> queries;

    // De-spam bookkeeping: one violation per lifecycle transition.
    std::set<std::string> overdue_recorded;  // keyed by id + revision count
    std::set<std::string> late_recorded;
    std::set<std::string> repetition_checked;
    std::set<std::string> prohibition_breached_yesterday;

    std::size_t step_index = 0;  // for diagnostics

    explicit ReplayEngine(const Scenario& scenario, const PropertyCalendar& calendar,
                          const ReasonablenessConfig& config)
        : sc(scenario), cal(calendar), cfg(config) {}

    [[noreturn]] void step_error(const std::string& what) const {
        throw ScenarioError("step " + std::to_string(step_index) + ": " + what);
    }

    CompileContext compile_context() const {
        return CompileContext{&st.registry, &cal, &cfg, st.agreement_term, false};
    }

    DueDate resolve_date_spec(const DateSpec& spec, const char* where) const {
        if (const auto* day = std::get_if<Day>(&spec.value)) return *day;
        if (const auto* bag = std::get_if<DateBag>(&spec.value)) return *bag;
        const std::string& phrase_text = std::get<std::string>(spec.value);
        CompiledValue compiled = compile(parse(phrase_text), compile_context());
        if (const auto* day = std::get_if<Day>(&compiled)) return *day;
        if (const auto* bag = std::get_if<DateBag>(&compiled)) return *bag;
        throw ScenarioError(std::string(where) + ": phrase \"" + phrase_text +
                            "\" does not denote a day or a bag of days");
    }

    BoundValue to_bound(const DueDate& due) const {
        if (const auto* day = std::get_if<Day>(&due)) return *day;
        return std::get<DateBag>(due);
    }

    void publish(const std::string& name, const BoundValue& value, const Day& at,
                 const std::string& reason) {
        auto existing = st.registry.designation(name);
        if (existing.current && *existing.current == value) return;
        BindingRecord rec;
        rec.value = value;
        rec.bound_at = at;
        rec.bound_by = "engine";
        rec.reason = reason;
        rec.source = BindingSource::Performance;
        st.registry = st.registry.bind(name, std::move(rec));
    }

    // Aggregate dates per obligation category, so that phrases like "the
    // last payment date of Payment" resolve through the registry.
    void publish_category_aggregates(const Day& at) {
        std::map<std::string, Day> latest_due;
        std::map<std::string, Day> last_discharged;
        for (const auto& [id, ob] : st.obligations) {
            if (ob.category.empty()) continue;
            const DueDate due = effective_due(ob);
            const Day* due_day = std::get_if<Day>(&due);
            Day resolved_due;
            bool have_due = false;
            if (due_day) {
                resolved_due = *due_day;
                have_due = true;
            } else if (std::get<DateBag>(due).is_resolved()) {
                resolved_due = std::get<DateBag>(due).resolution()->chosen;
                have_due = true;
            }
            if (have_due) {
                auto it = latest_due.find(ob.category);
                if (it == latest_due.end() || resolved_due > it->second) {
                    latest_due[ob.category] = resolved_due;
                }
            }
            if (ob.discharged_at) {
                auto it = last_discharged.find(ob.category);
                if (it == last_discharged.end() || *ob.discharged_at > it->second) {
                    last_discharged[ob.category] = *ob.discharged_at;
                }
            }
        }
        for (const auto& [category, day] : latest_due) {
            publish(category + ".latest_due", day, at, "latest due date in category");
        }
        for (const auto& [category, day] : last_discharged) {
            publish(category + ".last_discharged", day, at, "most recent discharge in category");
        }
    }

    void incur_from_decl(const ObligationDecl& decl, const Day& incurred_at, const Day& bound_at) {
        ObligationSpec spec;
        spec.id = decl.id;
        spec.category = decl.category;
        spec.obligor = decl.obligor;
        spec.obligee = decl.obligee;
        spec.incurred_at = incurred_at;
        spec.due = resolve_date_spec(decl.due, ("obligation " + decl.id).c_str());
        spec.end_date = decl.end_date;
        spec.survives = decl.survives;
        spec.inferred = decl.inferred;
        auto [next, id] = incur_obligation(std::move(st), std::move(spec));
        st = std::move(next);
        publish(id + ".due", to_bound(effective_due(st.obligations.at(id))), bound_at, "due date");
        publish_category_aggregates(bound_at);
    }

    void setup() {
        const Day begin = sc.horizon.begin().day();
        st.as_of = begin;
        st.agreement_term = sc.term.value_or(ContinuousInterval::between(
            TimePoint(begin.plus_days(-1)), TimePoint(sc.horizon.end().day().plus_days(1))));

        for (const BindingDecl& decl : sc.bindings) {
            BindingRecord rec;
            DueDate value = resolve_date_spec(decl.value, ("binding " + decl.name).c_str());
            rec.value = to_bound(value);
            rec.bound_at = decl.bound_at;
            rec.bound_by = decl.bound_by;
            rec.reason = decl.reason;
            rec.source = BindingSource::Text;
            rec.properties = decl.properties;
            st.registry = st.registry.bind(decl.name, std::move(rec));
        }
        for (const EventDecl& decl : sc.events) {
            if (st.events.count(decl.id) != 0) {
                throw ScenarioError("event id already in use: " + decl.id);
            }
            Event ev;
            ev.id = decl.id;
            ev.properties = decl.properties;
            ev.actual_start = decl.start;
            ev.actual_end = decl.end;
            st.events.emplace(decl.id, std::move(ev));
            if (decl.start) publish(decl.id + ".start", *decl.start, begin, "declared start");
            if (decl.end) publish(decl.id + ".end", *decl.end, begin, "declared end");
        }
        for (const ObligationDecl& decl : sc.obligations) {
            incur_from_decl(decl, decl.incurred_at, begin);
        }
        for (const RightDecl& decl : sc.rights) {
            if (st.rights.count(decl.id) != 0) {
                throw ScenarioError("right id already in use: " + decl.id);
            }
            Right r;
            r.id = decl.id;
            r.holder = decl.holder;
            r.mode = decl.mode;
            r.survives = decl.survives;
            st.rights.emplace(decl.id, std::move(r));
        }
        for (const RepetitionDecl& decl : sc.repetitions) {
            if (!sc.horizon.covers(decl.window_start) || !sc.horizon.covers(decl.window_end)) {
                throw ScenarioError("repetition window for " + decl.action.key() +
                                    " leaves the scenario horizon");
            }
        }
        // Steps must already be ordered by day and lie within the horizon.
        for (std::size_t i = 0; i < sc.steps.size(); ++i) {
            if (!sc.horizon.covers(sc.steps[i].day)) {
                throw ScenarioError("step " + std::to_string(i) + " at " +
                                    sc.steps[i].day.iso() + " leaves the horizon " +
                                    sc.horizon.to_string());
            }
            if (i > 0 && sc.steps[i].day < sc.steps[i - 1].day) {
                throw ScenarioError("steps are not ordered by day (step " + std::to_string(i) +
                                    ")");
            }
        }
    }

    void run() {
        setup();
        std::size_t next_step = 0;
        const Day begin = sc.horizon.begin().day();
        const Day end = sc.horizon.end().day();
        for (Day today = begin; today <= end; today = today.plus_days(1)) {
            st = advance_to(std::move(st), today);
            while (next_step < sc.steps.size() && sc.steps[next_step].day == today) {
                step_index = next_step;
                apply(sc.steps[next_step].action, today);
                ++next_step;
            }
            end_of_day_checks(today);
        }
    }

    void apply(const StepAction& action, const Day& today) {
        try {
            std::visit([&](const auto& a) { apply_action(a, today); }, action);
        } catch (const ScenarioError&) {
            throw;
        } catch (const Error& e) {
            step_error(e.what());
        }
    }

    void apply_action(const DesignateDateStep& a, const Day& today) {
        BindingRecord rec;
        rec.value = to_bound(resolve_date_spec(a.value, ("designation of " + a.name).c_str()));
        rec.bound_at = today;
        rec.bound_by = a.party;
        rec.reason = a.reason;
        rec.source = BindingSource::Performance;
        st.registry = st.registry.bind(a.name, std::move(rec));
    }

    void apply_action(const EventStartStep& a, const Day& today) {
        st = set_event_start(std::move(st), a.id, today);
        publish(a.id + ".start", today, today, "event started");
    }

    void apply_action(const EventEndStep& a, const Day& today) {
        st = set_event_end(std::move(st), a.id, today);
        publish(a.id + ".end", today, today, "event ended");
    }

    void apply_action(const IncurObligationStep& a, const Day& today) {
        incur_from_decl(a.spec, today, today);
    }

    void apply_action(const DeferStep& a, const Day& today) {
        st = defer_or_accelerate(std::move(st), a.id, a.new_due, today, RevisionKind::Deferral,
                                 a.reason);
        publish(a.id + ".due", effective_due(st.obligations.at(a.id)), today, "deferred");
        publish_category_aggregates(today);
    }

    void apply_action(const AccelerateStep& a, const Day& today) {
        st = defer_or_accelerate(std::move(st), a.id, a.new_due, today, RevisionKind::Acceleration,
                                 a.reason);
        publish(a.id + ".due", effective_due(st.obligations.at(a.id)), today, "accelerated");
        publish_category_aggregates(today);
    }

    void apply_action(const DischargeStep& a, const Day& today) {
        st = discharge(std::move(st), a.id, today);
        publish_category_aggregates(today);
        check_lateness(st.obligations.at(a.id), today);
    }

    void apply_action(const ActivateRightStep& a, const Day& today) {
        st = activate_right(std::move(st), a.id, a.trigger, today);
    }

    void apply_action(const ExerciseRightStep& a, const Day& today) {
        st = exercise_right(std::move(st), a.id, a.activation_index, today);
    }

    void apply_action(const RealizeAtomStep& a, const Day& today) {
        raw_atoms[a.atom].insert(today);
    }

    void apply_action(const ResolveBagStep& a, const Day& today) {
        auto ob_it = st.obligations.find(a.name);
        if (ob_it != st.obligations.end()) {
            auto* bag = std::get_if<DateBag>(&ob_it->second.due);
            if (!bag) step_error("obligation " + a.name + " does not have a bag due date");
            ob_it->second.due = bag->resolve(a.chosen, today, a.reason);
            publish(a.name + ".due", std::get<DateBag>(ob_it->second.due), today, "resolved");
            publish_category_aggregates(today);
            // Lateness may only now be provable.
            if (ob_it->second.discharged_at) check_lateness(ob_it->second, today);
            return;
        }
        auto designation = st.registry.designation(a.name);
        if (!designation.current) step_error("nothing named " + a.name + " to resolve");
        const auto* bag = std::get_if<DateBag>(&*designation.current);
        if (!bag) step_error(a.name + " is not bound to a bag of alternative dates");
        BindingRecord rec;
        rec.value = bag->resolve(a.chosen, today, a.reason);
        rec.bound_at = today;
        rec.bound_by = "engine";
        rec.reason = a.reason;
        rec.source = BindingSource::Performance;
        st.registry = st.registry.bind(a.name, std::move(rec));
    }

    void apply_action(const QueryStep& a, const Day& today) {
        QueryOutcome outcome;
        outcome.day = today;
        outcome.formula = a.formula_text;
        outcome.expected = a.expected;
        try {
            Trace trace = materialize_trace(st, sc.horizon, raw_atoms, today);
            outcome.result = query(trace, today, a.formula_text, &outcome.transcript);
        } catch (const CounterfactualError& e) {
            outcome.human_input = true;
            outcome.matched = !a.expected.has_value();
            violations.push_back(Violation{today, ViolationKind::HumanInputRequired,
                                           a.formula_text, e.what()});
            queries.push_back(std::move(outcome));
            return;
        } catch (const SyntaxError& e) {
            step_error(std::string("query does not parse: ") + e.what());
        } catch (const Error& e) {
            step_error(std::string("query failed: ") + e.what());
        }
        if (a.expected) {
            outcome.matched = outcome.result == to_tristate(*a.expected);
            if (!outcome.matched) {
                violations.push_back(Violation{
                    today, ViolationKind::QueryMismatch, a.formula_text,
                    "expected " + std::string(*a.expected ? "true" : "false") + ", got " +
                        to_string(outcome.result)});
            }
        }
        queries.push_back(std::move(outcome));
    }

    void check_lateness(const Obligation& ob, const Day& today) {
        if (!ob.discharged_at || late_recorded.count(ob.id) != 0) return;
        const DueDate due = effective_due(ob);
        if (due_compare(due, *ob.discharged_at, BagRelation::Before) == TriState::True) {
            late_recorded.insert(ob.id);
            violations.push_back(Violation{
                today, ViolationKind::SanctionLate, ob.id,
                "discharged " + ob.discharged_at->iso() + " after the due date " +
                    due_text(due) + "; a sanction may be applied"});
        }
    }

    void end_of_day_checks(const Day& today) {
        // Overdue transitions, recorded once per due-date revision state.
        for (const auto& [id, ob] : st.obligations) {
            if (ob.discharged_at && *ob.discharged_at <= today) continue;
            if (ob.end_date && today >= *ob.end_date) continue;  // auto-discharged
            const DueDate due = effective_due(ob);
            if (due_compare(due, today, BagRelation::Before) != TriState::True) continue;
            const std::string key = id + "#" + std::to_string(ob.revisions.size());
            if (!overdue_recorded.insert(key).second) continue;
            violations.push_back(Violation{today, ViolationKind::Overdue, id,
                                           "undischarged after the due date " + due_text(due)});
        }
        // Prohibitions: the forbidden formula must not be realized today.
        // A condition that stays true is one breach, recorded at its onset.
        if (!sc.prohibitions.empty()) {
            Trace trace = materialize_trace(st, sc.horizon, raw_atoms, today);
            for (const ProhibitionDecl& p : sc.prohibitions) {
                if (!p.interval.contains(TimePoint(today))) {
                    prohibition_breached_yesterday.erase(p.id);
                    continue;
                }
                TriState realized = query(trace, today, p.formula_text);
                if (realized == TriState::True) {
                    if (prohibition_breached_yesterday.insert(p.id).second) {
                        violations.push_back(
                            Violation{today, ViolationKind::ProhibitionBreach, p.id,
                                      "prohibited condition " + p.formula_text + " realized"});
                    }
                } else {
                    prohibition_breached_yesterday.erase(p.id);
                }
            }
        }
        // Repetition bounds are settled when their window closes.
        for (const RepetitionDecl& decl : sc.repetitions) {
            if (decl.window_end != today) continue;
            const std::string key = decl.action.key() + "@" + decl.window_end.iso();
            if (!repetition_checked.insert(key).second) continue;
            Trace trace = materialize_trace(st, sc.horizon, raw_atoms, today);
            RepetitionConstraint constraint{
                decl.action, decl.min_count, decl.max_count,
                DateSet::from_rule(FilteredRange{nullptr, "all"}, decl.window_start,
                                   decl.window_end)};
            RepetitionCheck check = check_repetition(trace, constraint);
            if (!check.satisfied) {
                std::string bounds;
                if (decl.min_count) bounds += "at least " + std::to_string(*decl.min_count);
                if (decl.max_count) {
                    if (!bounds.empty()) bounds += ", ";
                    bounds += "no more than " + std::to_string(*decl.max_count);
                }
                violations.push_back(Violation{
                    today, ViolationKind::RepetitionBreach, decl.action.key(),
                    "performed " + std::to_string(check.count) + " times (required " + bounds +
                        ") within " + decl.window_start.iso() + ".." + decl.window_end.iso()});
            }
        }
    }
};

}  // namespace

std::string to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::Overdue: return "Overdue";
        case ViolationKind::SanctionLate: return "SanctionLate";
        case ViolationKind::ProhibitionBreach: return "ProhibitionBreach";
        case ViolationKind::RepetitionBreach: return "RepetitionBreach";
        case ViolationKind::QueryMismatch: return "QueryMismatch";
        default: return "HumanInputRequired";
    }
}

Report replay(const Scenario& sc, const PropertyCalendar& cal, const ReasonablenessConfig& cfg) {
    ReplayEngine engine(sc, cal, cfg);
    engine.run();
    Report report;
    report.scenario_id = sc.id;
    report.violations = std::move(engine.violations);
    report.queries = std::move(engine.queries);
    report.final_state = std::move(engine.st);
    report.raw_atoms = std::move(engine.raw_atoms);
    return report;
}

Trace materialize_trace(const ContractState& st, const Span& horizon,
                        const std::map<AtomInstance, std::set<Day>>& raw_atoms, const Day& up_to) {
    Trace trace(horizon);
    const Day begin = horizon.begin().day();
    const Day last = std::min(up_to, horizon.end().day());

    for (const auto& [atom, days] : raw_atoms) {
        for (const Day& d : days) {
            if (d <= last) trace.record(atom, d);
        }
    }

    auto record_point = [&](const char* name, const std::string& arg, const Day& d) {
        if (d >= begin && d <= last) trace.record(AtomInstance{name, {arg}}, d);
    };

    for (const auto& [id, ev] : st.events) {
        if (ev.actual_start) record_point("started", id, *ev.actual_start);
        if (ev.actual_end) record_point("ended", id, *ev.actual_end);
        for (Day d = begin; d <= last; d = d.plus_days(1)) {
            const EventPhase phase = event_phase(ev, d);
            if (phase.has_occurred) {
                trace.record(AtomInstance{"has_occurred", {id}}, d);
                for (const std::string& prop : ev.properties) {
                    trace.record(AtomInstance{"has_occurred", {prop}}, d);
                }
            }
            if (phase.is_continuing) {
                trace.record(AtomInstance{"is_continuing", {id}}, d);
                for (const std::string& prop : ev.properties) {
                    trace.record(AtomInstance{"is_continuing", {prop}}, d);
                }
            }
            if (phase.has_ceased) {
                trace.record(AtomInstance{"has_ceased", {id}}, d);
                for (const std::string& prop : ev.properties) {
                    trace.record(AtomInstance{"has_ceased", {prop}}, d);
                }
            }
        }
    }

    for (const auto& [id, ob] : st.obligations) {
        record_point("incurred", id, ob.incurred_at);
        if (ob.discharged_at) record_point("discharged", id, *ob.discharged_at);
        for (Day d = begin; d <= last; d = d.plus_days(1)) {
            const bool discharged_by_d = ob.discharged_at && *ob.discharged_at <= d;
            if (discharged_by_d) trace.record(AtomInstance{"has_satisfied", {id}}, d);
            if (ob.end_date && d >= *ob.end_date && !discharged_by_d) {
                trace.record(AtomInstance{"auto_discharged", {id}}, d);
                continue;
            }
            if (discharged_by_d) continue;
            // Status as it stood on day d: later revisions are not visible.
            const DueDate due = effective_due_at(ob, d);
            const TriState overdue = due_compare(due, d, BagRelation::Before);
            const TriState due_today = due_compare(due, d, BagRelation::Same);
            if (overdue == TriState::True) {
                trace.record(AtomInstance{"is_overdue", {id}}, d);
            } else if (overdue == TriState::Indeterminate) {
                trace.record_open(AtomInstance{"is_overdue", {id}}, d);
            }
            if (due_today == TriState::True) {
                trace.record(AtomInstance{"is_due", {id}}, d);
            } else if (due_today == TriState::Indeterminate) {
                trace.record_open(AtomInstance{"is_due", {id}}, d);
            }
        }
    }

    for (const auto& [id, r] : st.rights) {
        for (const RightActivation& act : r.activations) {
            record_point("activated", id, act.activated_at);
            for (const Day& ex : act.exercises) record_point("exercised", id, ex);
        }
        for (Day d = begin; d <= last; d = d.plus_days(1)) {
            bool active = false;
            if (const auto* continuous = std::get_if<ContinuousRightMode>(&r.mode)) {
                active = continuous->interval.contains(TimePoint(d));
            } else {
                for (const RightActivation& act : r.activations) {
                    if (act.activated_at <= d) active = true;
                }
            }
            if (active) trace.record(AtomInstance{"is_active", {id}}, d);
        }
    }

    return trace;
}

TriState query(const Trace& trace, const Day& day, const std::string& formula_text,
               Transcript* transcript) {
    Formula f = parse_formula(formula_text);
    try {
        return to_tristate(realized_at(trace, f, day, {}, {}, transcript));
    } catch (const IndeterminateBag&) {
        return TriState::Indeterminate;
    }
}

namespace {

Json transcript_to_json(const Transcript& transcript) {
    Json out = Json::array();
    for (const TranscriptEntry& entry : transcript) {
        out.push_back(Json{{"atom", entry.atom.key()},
                           {"day", entry.day.iso()},
                           {"value", entry.value}});
    }
    return out;
}

Json final_state_to_json(const Report& report) {
    const ContractState& st = report.final_state;
    const Day at = st.as_of;
    Json events = Json::array();
    for (const auto& [id, ev] : st.events) {
        const EventPhase phase = event_phase(ev, at);
        events.push_back(Json{{"id", id},
                              {"phase", to_string(phase.phase)},
                              {"start", ev.actual_start ? Json(ev.actual_start->iso()) : Json()},
                              {"end", ev.actual_end ? Json(ev.actual_end->iso()) : Json()}});
    }
    Json obligations = Json::array();
    for (const auto& [id, ob] : st.obligations) {
        std::string status;
        try {
            status = to_string(obligation_status(ob, at));
        } catch (const IndeterminateBag&) {
            status = "Indeterminate";
        }
        const DueDate due = effective_due(ob);
        std::size_t alternatives = 1;
        if (const auto* bag = std::get_if<DateBag>(&due)) alternatives = bag->size();
        obligations.push_back(
            Json{{"id", id},
                 {"category", ob.category},
                 {"status", status},
                 {"due", due_text(due)},
                 {"dueAlternatives", alternatives},
                 {"revisions", ob.revisions.size()},
                 {"discharged", ob.discharged_at ? Json(ob.discharged_at->iso()) : Json()}});
    }
    Json rights = Json::array();
    for (const auto& [id, r] : st.rights) {
        std::size_t exercises = 0;
        for (const RightActivation& act : r.activations) exercises += act.exercises.size();
        rights.push_back(Json{{"id", id},
                              {"activations", r.activations.size()},
                              {"exercises", exercises}});
    }
    Json bindings = Json::array();
    for (const std::string& name : st.registry.names()) {
        const auto* history = st.registry.history(name);
        const BindingRecord& current = history->back();
        std::string value;
        if (const auto* day = std::get_if<Day>(&current.value)) {
            value = day->iso();
        } else {
            value = due_text(std::get<DateBag>(current.value));
        }
        bindings.push_back(Json{{"name", name},
                                {"records", history->size()},
                                {"current", value},
                                {"source", to_string(current.source)}});
    }
    return Json{{"asOf", at.iso()},
                {"events", std::move(events)},
                {"obligations", std::move(obligations)},
                {"rights", std::move(rights)},
                {"bindings", std::move(bindings)}};
}

}  // namespace

Json report_to_json(const Report& report) {
    Json violations = Json::array();
    for (const Violation& v : report.violations) {
        violations.push_back(Json{{"day", v.day.iso()},
                                  {"kind", to_string(v.kind)},
                                  {"subject", v.subject},
                                  {"detail", v.detail}});
    }
    Json queries = Json::array();
    for (const QueryOutcome& q : report.queries) {
        Json entry{{"day", q.day.iso()},
                   {"formula", q.formula},
                   {"result", q.human_input ? "human-input-required" : to_string(q.result)},
                   {"matched", q.matched}};
        if (q.expected) entry["expected"] = *q.expected;
        entry["transcript"] = transcript_to_json(q.transcript);
        queries.push_back(std::move(entry));
    }
    return Json{{"scenario", report.scenario_id},
                {"violations", std::move(violations)},
                {"queries", std::move(queries)},
                {"finalState", final_state_to_json(report)}};
}

std::string report_to_text(const Report& report) {
    std::ostringstream out;
    out << "scenario " << report.scenario_id << "\n";
    if (report.violations.empty()) {
        out << "  no violations\n";
    } else {
        out << "  violations:\n";
        for (const Violation& v : report.violations) {
            out << "    " << v.day.iso() << "  " << to_string(v.kind) << "  " << v.subject
                << ": " << v.detail << "\n";
        }
    }
    if (!report.queries.empty()) {
        out << "  queries:\n";
        for (const QueryOutcome& q : report.queries) {
            out << "    " << q.day.iso() << "  " << q.formula << " -> "
                << (q.human_input ? "human-input-required" : to_string(q.result));
            if (q.expected) out << (q.matched ? "  (as expected)" : "  (MISMATCH)");
            out << "\n";
        }
    }
    const Json final_state = final_state_to_json(report);
    out << "  final state: " << final_state["obligations"].size() << " obligations, "
        << final_state["events"].size() << " events, " << final_state["rights"].size()
        << " rights as of " << final_state["asOf"].get<std::string>() << "\n";
    return out.str();
}

}  // namespace cte
