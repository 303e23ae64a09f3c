// cte: temporal semantics of standardized derivatives documentation from
// the command line. Subcommands:
//
//   cte parse "<phrase>"                     print the normalized form and a gloss
//   cte eval "<phrase>" [--bindings F] ...   compile a phrase to a value
//   cte simulate <scenario> [--calendar F]   replay a scenario, print the report
//   cte check <scenario> [...]               exit 0 iff the replay is clean
//
// Results go to stdout, diagnostics to stderr. Exit codes: 0 clean,
// 1 violations (check only), 2 malformed input or other errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cte/compile.hpp"
#include "cte/errors.hpp"
#include "cte/json_io.hpp"
#include "cte/phrase.hpp"
#include "cte/replay.hpp"

namespace fs = std::filesystem;

namespace {

// Looks next to the referring file, then under CTE_CALENDAR_DIR.
std::string resolve_file(const std::string& ref, const fs::path& base_dir) {
    if (fs::exists(ref)) return ref;
    if (!base_dir.empty()) {
        const fs::path relative = base_dir / ref;
        if (fs::exists(relative)) return relative.string();
    }
    if (const char* dir = std::getenv("CTE_CALENDAR_DIR")) {
        const fs::path env_path = fs::path(dir) / ref;
        if (fs::exists(env_path)) return env_path.string();
    }
    throw cte::ScenarioError("cannot find file: " + ref);
}

cte::PropertyCalendar load_calendar_for(const cte::Scenario& sc,
                                        const std::string& calendar_flag,
                                        const fs::path& scenario_dir) {
    if (!calendar_flag.empty()) {
        return cte::load_calendar(resolve_file(calendar_flag, scenario_dir));
    }
    if (sc.calendar_ref) {
        return cte::load_calendar(resolve_file(*sc.calendar_ref, scenario_dir));
    }
    return cte::PropertyCalendar{};
}

cte::ReasonablenessConfig load_config(const std::string& reasonableness_flag) {
    if (reasonableness_flag.empty()) return cte::ReasonablenessConfig{};
    return cte::load_reasonableness(resolve_file(reasonableness_flag, {}));
}

cte::BindingRegistry load_bindings(const std::string& path) {
    cte::BindingRegistry registry;
    if (path.empty()) return registry;
    std::ifstream in(resolve_file(path, {}));
    cte::Json j;
    in >> j;
    for (const auto& [name, value] : j.items()) {
        cte::BindingRecord rec;
        if (value.is_string()) {
            const cte::Day day = cte::Day::from_iso(value.get<std::string>());
            rec.value = day;
            rec.bound_at = day;
        } else if (value.is_object() && value.contains("bag")) {
            std::vector<cte::Day> days;
            for (const auto& d : value["bag"]) days.push_back(cte::day_from_json(d));
            cte::DateBag bag = cte::DateBag::of(days);
            rec.value = bag;
            rec.bound_at = days.empty() ? cte::Day{} : days.front();
        } else {
            throw cte::ScenarioError("binding \"" + name +
                                     "\" must be an ISO date or {\"bag\": [...]}");
        }
        rec.bound_by = "bindings file";
        rec.source = cte::BindingSource::Text;
        registry = registry.bind(name, std::move(rec));
    }
    return registry;
}

cte::TimePoint parse_time_point(const std::string& s, cte::TimePoint fallback) {
    if (s.empty()) return fallback;
    if (s == "-inf") return cte::TimePoint::neg_infinity();
    if (s == "+inf") return cte::TimePoint::pos_infinity();
    return cte::TimePoint(cte::Day::from_iso(s));
}

int run_parse(const std::string& phrase_text, bool as_json) {
    const cte::PhrasePtr ast = cte::parse(phrase_text);
    if (as_json) {
        cte::Json out{{"ast", cte::to_text(ast)}, {"explain", cte::explain(ast)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "ast:     " << cte::to_text(ast) << "\n";
        std::cout << "explain: " << cte::explain(ast) << "\n";
    }
    return 0;
}

int run_eval(const std::string& phrase_text, const std::string& bindings_path,
             const std::string& calendar_path, const std::string& reasonableness_path,
             const std::string& term_start, const std::string& term_end) {
    const cte::PhrasePtr ast = cte::parse(phrase_text);
    const cte::BindingRegistry registry = load_bindings(bindings_path);
    cte::PropertyCalendar calendar;
    if (!calendar_path.empty()) {
        calendar = cte::load_calendar(resolve_file(calendar_path, {}));
    }
    const cte::ReasonablenessConfig config = load_config(reasonableness_path);
    cte::CompileContext ctx;
    ctx.registry = &registry;
    ctx.calendar = &calendar;
    ctx.config = &config;
    ctx.term = cte::ContinuousInterval::between(
        parse_time_point(term_start, cte::TimePoint::neg_infinity()),
        parse_time_point(term_end, cte::TimePoint::pos_infinity()));
    const cte::CompiledValue value = cte::compile(ast, ctx);
    std::cout << cte::describe(value) << "\n";
    return 0;
}

int run_replay(const std::string& scenario_path, const std::string& calendar_flag,
               const std::string& reasonableness_flag, const std::string& format,
               bool exit_on_violations) {
    const std::string resolved = resolve_file(scenario_path, {});
    const cte::Scenario sc = cte::load_scenario(resolved);
    const cte::PropertyCalendar calendar =
        load_calendar_for(sc, calendar_flag, fs::path(resolved).parent_path());
    const cte::ReasonablenessConfig config = load_config(reasonableness_flag);
    const cte::Report report = cte::replay(sc, calendar, config);
    if (format == "text") {
        std::cout << cte::report_to_text(report);
    } else {
        std::cout << cte::report_to_json(report).dump(2) << "\n";
    }
    if (exit_on_violations && !report.violations.empty()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"temporal semantics engine for standardized derivatives documentation"};
    app.require_subcommand(1);

    std::string phrase_text;
    bool parse_json = false;
    CLI::App* cmd_parse = app.add_subcommand("parse", "parse a phrase and print its reading");
    cmd_parse->add_option("phrase", phrase_text, "temporal phrase")->required();
    cmd_parse->add_flag("--json", parse_json, "emit JSON");

    std::string eval_phrase, bindings_path, eval_calendar, eval_reasonableness;
    std::string term_start, term_end;
    CLI::App* cmd_eval = app.add_subcommand("eval", "compile a phrase to a value");
    cmd_eval->add_option("phrase", eval_phrase, "temporal phrase")->required();
    cmd_eval->add_option("--bindings", bindings_path, "JSON file of name bindings");
    cmd_eval->add_option("--calendar", eval_calendar, "calendar JSON file");
    cmd_eval->add_option("--reasonableness", eval_reasonableness, "adverb window JSON file");
    cmd_eval->add_option("--term-start", term_start, "agreement term start (ISO or -inf)");
    cmd_eval->add_option("--term-end", term_end, "agreement term end (ISO or +inf)");

    std::string scenario_path, sim_calendar, sim_reasonableness, format = "json";
    CLI::App* cmd_simulate = app.add_subcommand("simulate", "replay a scenario, print the report");
    cmd_simulate->add_option("scenario", scenario_path, "scenario JSON file")->required();
    cmd_simulate->add_option("--calendar", sim_calendar, "calendar JSON file");
    cmd_simulate->add_option("--reasonableness", sim_reasonableness, "adverb window JSON file");
    cmd_simulate->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    std::string check_path, check_calendar, check_reasonableness, check_format = "json";
    CLI::App* cmd_check = app.add_subcommand("check", "replay and gate on violations");
    cmd_check->add_option("scenario", check_path, "scenario JSON file")->required();
    cmd_check->add_option("--calendar", check_calendar, "calendar JSON file");
    cmd_check->add_option("--reasonableness", check_reasonableness, "adverb window JSON file");
    cmd_check->add_option("--format", check_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_parse->parsed()) return run_parse(phrase_text, parse_json);
        if (cmd_eval->parsed()) {
            return run_eval(eval_phrase, bindings_path, eval_calendar, eval_reasonableness,
                            term_start, term_end);
        }
        if (cmd_simulate->parsed()) {
            return run_replay(scenario_path, sim_calendar, sim_reasonableness, format, false);
        }
        if (cmd_check->parsed()) {
            return run_replay(check_path, check_calendar, check_reasonableness, check_format,
                              true);
        }
    } catch (const cte::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
