#pragma once

#include <vector>

#include "cte/formula.hpp"
#include "cte/trace.hpp"

namespace cte {

struct EvalOptions {
    // When false (the default), a finite span endpoint outside the trace
    // horizon is an OutOfHorizon error; when true it clamps instead.
    // Extreme endpoints always clamp: they mean "as far as the record goes".
    bool clamp_spans = false;
};

// Which atom lookups on which days decided an evaluation.
struct TranscriptEntry {
    AtomInstance atom;
    Day day;
    bool value = false;
};
using Transcript = std::vector<TranscriptEntry>;

// Decides whether the formula is realized at day t against the trace.
// Env supplies values for the formula's free time variables.
bool realized_at(const Trace& trace, const Formula& f, const Day& t, const Env& env = {},
                 const EvalOptions& options = {}, Transcript* transcript = nullptr);

// Realized at least once during the span.
bool rd(const Trace& trace, const Formula& f, const Span& span, const Env& env = {},
        const EvalOptions& options = {}, Transcript* transcript = nullptr);

// Realized throughout the span.
bool rt(const Trace& trace, const Formula& f, const Span& span, const Env& env = {},
        const EvalOptions& options = {}, Transcript* transcript = nullptr);

// Realized before the given day: RD over the span from the horizon start
// up to the day before `before`, clamped to the horizon.
bool rb(const Trace& trace, const Formula& f, const Day& before, const Env& env = {},
        const EvalOptions& options = {}, Transcript* transcript = nullptr);

// Resolves a time expression under the bindings; an unresolved bag in a
// day-valued position raises IndeterminateBag.
Day resolve_time(const TimeExpr& expr, const Env& env);

// Resolves span endpoints and clamps/checks against the horizon.
Span resolve_span(const SpanExpr& expr, const Env& env, const Span& horizon,
                  const EvalOptions& options);

}  // namespace cte
