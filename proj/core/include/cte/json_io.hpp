#pragma once

#include <string>

#include <json.hpp>

#include "cte/calendar.hpp"
#include "cte/reasonableness.hpp"
#include "cte/scenario.hpp"

namespace cte {

using Json = nlohmann::ordered_json;

// Calendar files map property names to rule records, e.g.
//   {"GeneralBusinessDay": {"kind": "weekdays",
//                           "days": ["Mon","Tue","Wed","Thu","Fri"],
//                           "holidays": ["2018-12-25"]}}
// Other kinds: {"kind": "explicit", "dates": [...]} and
// {"kind": "nth_weekday", "n": 1, "weekday": "Mon"}.
PropertyCalendar calendar_from_json(const Json& j);
PropertyCalendar load_calendar(const std::string& path);

// {"promptly": 1, "as soon as reasonably practicable": 2, "timely": 1}
ReasonablenessConfig reasonableness_from_json(const Json& j);
ReasonablenessConfig load_reasonableness(const std::string& path);

Scenario scenario_from_json(const Json& j);
Scenario load_scenario(const std::string& path);

Day day_from_json(const Json& j);
TimePoint timepoint_from_json(const Json& j);  // "-inf" / "+inf" / ISO date
ContinuousInterval interval_from_json(const Json& j);
Span span_from_json(const Json& j);
AtomInstance atom_from_text(const std::string& text);  // "name(arg,...)"

}  // namespace cte
