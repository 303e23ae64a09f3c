#include "cte/json_io.hpp"

#include <fstream>

#include "cte/errors.hpp"
#include "cte/formula_text.hpp"

namespace cte {
namespace {

Json read_json_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw ScenarioError(std::string("cannot open ") + what + " file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ScenarioError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return j;
}

const Json& require(const Json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ScenarioError(std::string(where) + " is missing required field \"" + key + "\"");
    }
    return *it;
}

DateSpec date_spec_from_json(const Json& j) {
    DateSpec spec;
    if (j.is_string()) {
        spec.value = Day::from_iso(j.get<std::string>());
    } else if (j.is_object() && j.contains("phrase")) {
        spec.value = j["phrase"].get<std::string>();
    } else if (j.is_object() && j.contains("bag")) {
        std::vector<Day> days;
        for (const auto& d : j["bag"]) days.push_back(Day::from_iso(d.get<std::string>()));
        spec.value = DateBag::of(std::move(days));
    } else {
        throw ScenarioError("a date must be an ISO string, {\"phrase\": ...} or {\"bag\": [...]}");
    }
    return spec;
}

std::set<std::string> string_set(const Json& j) {
    std::set<std::string> out;
    for (const auto& s : j) out.insert(s.get<std::string>());
    return out;
}

}  // namespace

Day day_from_json(const Json& j) { return Day::from_iso(j.get<std::string>()); }

TimePoint timepoint_from_json(const Json& j) {
    const std::string s = j.get<std::string>();
    if (s == "-inf") return TimePoint::neg_infinity();
    if (s == "+inf") return TimePoint::pos_infinity();
    return TimePoint(Day::from_iso(s));
}

ContinuousInterval interval_from_json(const Json& j) {
    return ContinuousInterval::between(timepoint_from_json(require(j, "start", "interval")),
                                       timepoint_from_json(require(j, "end", "interval")));
}

Span span_from_json(const Json& j) {
    return Span(TimePoint(day_from_json(require(j, "begin", "span"))),
                TimePoint(day_from_json(require(j, "end", "span"))));
}

AtomInstance atom_from_text(const std::string& text) {
    Formula f = parse_formula(text);
    if (const auto* atom = std::get_if<Atom>(&f.node())) return atom->atom;
    throw ScenarioError("expected a plain atom like name(arg), got: " + text);
}

PropertyCalendar calendar_from_json(const Json& j) {
    PropertyCalendar cal;
    for (const auto& [name, rule] : j.items()) {
        const std::string kind = require(rule, "kind", "calendar rule").get<std::string>();
        if (kind == "weekdays") {
            WeekdayRule r;
            for (const auto& d : require(rule, "days", "weekdays rule")) {
                r.weekdays.insert(weekday_from_string(d.get<std::string>()));
            }
            if (rule.contains("holidays")) {
                for (const auto& d : rule["holidays"]) r.holidays.push_back(day_from_json(d));
            }
            cal.define(name, std::move(r));
        } else if (kind == "explicit") {
            ExplicitSetRule r;
            for (const auto& d : require(rule, "dates", "explicit rule")) {
                r.days.push_back(day_from_json(d));
            }
            cal.define(name, std::move(r));
        } else if (kind == "nth_weekday") {
            NthWeekdayRule r;
            r.nth = require(rule, "n", "nth_weekday rule").get<int>();
            r.weekday = weekday_from_string(
                require(rule, "weekday", "nth_weekday rule").get<std::string>());
            cal.define(name, r);
        } else {
            throw ScenarioError("unknown calendar rule kind: " + kind);
        }
    }
    return cal;
}

PropertyCalendar load_calendar(const std::string& path) {
    return calendar_from_json(read_json_file(path, "calendar"));
}

ReasonablenessConfig reasonableness_from_json(const Json& j) {
    ReasonablenessConfig cfg;
    for (const auto& [adverb, days] : j.items()) {
        cfg.set(adverb, days.get<std::int64_t>());
    }
    return cfg;
}

ReasonablenessConfig load_reasonableness(const std::string& path) {
    return reasonableness_from_json(read_json_file(path, "reasonableness"));
}

namespace {

RightMode right_mode_from_json(const Json& j) {
    const std::string kind = require(j, "kind", "right mode").get<std::string>();
    if (kind == "continuous") {
        return ContinuousRightMode{interval_from_json(require(j, "interval", "right mode"))};
    }
    if (kind == "triggered") {
        return TriggeredRightMode{require(j, "trigger", "right mode").get<std::string>()};
    }
    throw ScenarioError("unknown right mode: " + kind);
}

ObligationDecl obligation_decl_from_json(const Json& j, bool with_incurred) {
    ObligationDecl decl;
    decl.id = require(j, "id", "obligation").get<std::string>();
    decl.category = j.value("category", std::string{});
    decl.obligor = j.value("obligor", std::string{});
    decl.obligee = j.value("obligee", std::string{});
    if (with_incurred) decl.incurred_at = day_from_json(require(j, "incurredAt", "obligation"));
    decl.due = date_spec_from_json(require(j, "due", "obligation"));
    if (j.contains("end") && !j["end"].is_null()) decl.end_date = day_from_json(j["end"]);
    decl.survives = j.value("survives", false);
    decl.inferred = j.value("inferred", false);
    return decl;
}

StepAction step_action_from_json(const Json& j) {
    const std::string kind = require(j, "kind", "step action").get<std::string>();
    if (kind == "DesignateDate") {
        return DesignateDateStep{require(j, "name", "DesignateDate").get<std::string>(),
                                 date_spec_from_json(require(j, "value", "DesignateDate")),
                                 j.value("party", std::string{}),
                                 j.value("reason", std::string{})};
    }
    if (kind == "EventStart") return EventStartStep{require(j, "id", kind.c_str()).get<std::string>()};
    if (kind == "EventEnd") return EventEndStep{require(j, "id", kind.c_str()).get<std::string>()};
    if (kind == "IncurObligation") {
        return IncurObligationStep{obligation_decl_from_json(j, /*with_incurred=*/false)};
    }
    if (kind == "Defer") {
        return DeferStep{require(j, "id", kind.c_str()).get<std::string>(),
                         day_from_json(require(j, "newDue", kind.c_str())),
                         j.value("reason", std::string{})};
    }
    if (kind == "Accelerate") {
        return AccelerateStep{require(j, "id", kind.c_str()).get<std::string>(),
                              day_from_json(require(j, "newDue", kind.c_str())),
                              j.value("reason", std::string{})};
    }
    if (kind == "Discharge") return DischargeStep{require(j, "id", kind.c_str()).get<std::string>()};
    if (kind == "ActivateRight") {
        return ActivateRightStep{require(j, "id", kind.c_str()).get<std::string>(),
                                 j.value("trigger", std::string{})};
    }
    if (kind == "ExerciseRight") {
        return ExerciseRightStep{require(j, "id", kind.c_str()).get<std::string>(),
                                 j.value("activation", std::size_t{0})};
    }
    if (kind == "RealizeAtom") {
        return RealizeAtomStep{atom_from_text(require(j, "atom", kind.c_str()).get<std::string>())};
    }
    if (kind == "ResolveBag") {
        return ResolveBagStep{require(j, "name", kind.c_str()).get<std::string>(),
                              day_from_json(require(j, "chosen", kind.c_str())),
                              j.value("reason", std::string{})};
    }
    if (kind == "Query") {
        QueryStep q;
        q.formula_text = require(j, "formula", kind.c_str()).get<std::string>();
        if (j.contains("expected") && !j["expected"].is_null()) {
            q.expected = j["expected"].get<bool>();
        }
        return q;
    }
    throw ScenarioError("unknown step kind: " + kind);
}

}  // namespace

Scenario scenario_from_json(const Json& j) {
    Scenario sc;
    sc.id = require(j, "id", "scenario").get<std::string>();
    sc.description = j.value("description", std::string{});
    sc.horizon = span_from_json(require(j, "horizon", "scenario"));
    if (j.contains("calendar") && !j["calendar"].is_null()) {
        sc.calendar_ref = j["calendar"].get<std::string>();
    }
    if (j.contains("term") && !j["term"].is_null()) {
        sc.term = interval_from_json(j["term"]);
    }
    for (const auto& b : j.value("bindings", Json::array())) {
        BindingDecl decl;
        decl.name = require(b, "name", "binding").get<std::string>();
        decl.value = date_spec_from_json(require(b, "value", "binding"));
        decl.bound_at = b.contains("boundAt") ? day_from_json(b["boundAt"])
                                              : sc.horizon.begin().day();
        decl.bound_by = b.value("boundBy", std::string{});
        decl.reason = b.value("reason", std::string{});
        if (b.contains("properties")) decl.properties = string_set(b["properties"]);
        sc.bindings.push_back(std::move(decl));
    }
    const Json decls = j.value("declarations", Json::object());
    for (const auto& e : decls.value("events", Json::array())) {
        EventDecl decl;
        decl.id = require(e, "id", "event").get<std::string>();
        if (e.contains("properties")) decl.properties = string_set(e["properties"]);
        if (e.contains("start") && !e["start"].is_null()) decl.start = day_from_json(e["start"]);
        if (e.contains("end") && !e["end"].is_null()) decl.end = day_from_json(e["end"]);
        sc.events.push_back(std::move(decl));
    }
    for (const auto& o : decls.value("obligations", Json::array())) {
        sc.obligations.push_back(obligation_decl_from_json(o, /*with_incurred=*/true));
    }
    for (const auto& r : decls.value("rights", Json::array())) {
        RightDecl decl;
        decl.id = require(r, "id", "right").get<std::string>();
        decl.holder = r.value("holder", std::string{});
        decl.mode = right_mode_from_json(require(r, "mode", "right"));
        decl.survives = r.value("survives", false);
        sc.rights.push_back(std::move(decl));
    }
    for (const auto& r : decls.value("repetitions", Json::array())) {
        RepetitionDecl decl;
        decl.action = atom_from_text(require(r, "action", "repetition").get<std::string>());
        if (r.contains("min") && !r["min"].is_null()) decl.min_count = r["min"].get<std::int64_t>();
        if (r.contains("max") && !r["max"].is_null()) decl.max_count = r["max"].get<std::int64_t>();
        if (decl.min_count && decl.max_count && *decl.min_count > *decl.max_count) {
            throw ScenarioError("repetition of " + decl.action.key() +
                                " has min > max, which nothing can satisfy");
        }
        const Json& w = require(r, "window", "repetition");
        decl.window_start = day_from_json(require(w, "start", "repetition window"));
        decl.window_end = day_from_json(require(w, "end", "repetition window"));
        sc.repetitions.push_back(std::move(decl));
    }
    for (const auto& p : decls.value("prohibitions", Json::array())) {
        ProhibitionDecl decl;
        decl.id = require(p, "id", "prohibition").get<std::string>();
        decl.formula_text = require(p, "formula", "prohibition").get<std::string>();
        decl.interval = interval_from_json(require(p, "interval", "prohibition"));
        sc.prohibitions.push_back(std::move(decl));
    }
    for (const auto& s : j.value("steps", Json::array())) {
        Step step;
        step.day = day_from_json(require(s, "day", "step"));
        step.action = step_action_from_json(require(s, "action", "step"));
        sc.steps.push_back(std::move(step));
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    return scenario_from_json(read_json_file(path, "scenario"));
}

}  // namespace cte
