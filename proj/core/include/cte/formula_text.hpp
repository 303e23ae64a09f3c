#pragma once

#include <string>
#include <string_view>

#include "cte/formula.hpp"

namespace cte {

// Textual surface syntax for formulas, used by scenario queries and
// prohibition declarations:
//
//   atom(args)            paid(PartyA), has_occurred(Default)
//   not F, F and G, F or G, (F)
//   at(t, F)              F realized at time t
//   rd(t1..t2, F)         realized at least once in the span
//   rt(t1..t2, F)         realized throughout the span
//   rb(t, F)              realized before day t
//   before(t1, t2)        t1 precedes t2
//   forall(x, {d, ...}, F)  /  exists(x, {d, ...}, F)
//
// Times are ISO dates or variables, optionally shifted: x+3, 2018-06-01-1.
// Span endpoints also admit -inf / +inf, which clamp to the trace horizon.
Formula parse_formula(std::string_view text);

// Canonical spelling; parse_formula(format_formula(f)) reproduces f.
std::string format_formula(const Formula& f);

std::string format_time(const TimeExpr& t);
std::string format_span(const SpanExpr& s);

}  // namespace cte
