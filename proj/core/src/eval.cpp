#include "cte/eval.hpp"

#include "cte/errors.hpp"

namespace cte {
namespace {

struct Evaluator {
    const Trace& trace;
    const EvalOptions& options;
    Transcript* transcript;

    bool eval(const Formula& f, const Day& t, const Env& env) {
        return std::visit([&](const auto& node) { return eval_node(node, t, env); }, f.node());
    }

    bool eval_node(const Atom& a, const Day& t, const Env&) {
        bool value = trace.realized(a.atom, t);
        if (transcript) transcript->push_back(TranscriptEntry{a.atom, t, value});
        return value;
    }
    bool eval_node(const Not& n, const Day& t, const Env& env) {
        return !eval(*n.body, t, env);
    }
    bool eval_node(const And& n, const Day& t, const Env& env) {
        // No short-circuit: the transcript should name both decision sites.
        bool lhs = eval(*n.lhs, t, env);
        bool rhs = eval(*n.rhs, t, env);
        return lhs && rhs;
    }
    bool eval_node(const Or& n, const Day& t, const Env& env) {
        bool lhs = eval(*n.lhs, t, env);
        bool rhs = eval(*n.rhs, t, env);
        return lhs || rhs;
    }
    bool eval_node(const ForAllDays& n, const Day& t, const Env& env) {
        for (const Day& d : n.domain.members()) {
            Env inner = env;
            inner[n.var] = d;
            if (!eval(*n.body, t, inner)) return false;
        }
        return true;  // vacuous over an empty domain
    }
    bool eval_node(const ExistsDay& n, const Day& t, const Env& env) {
        for (const Day& d : n.domain.members()) {
            Env inner = env;
            inner[n.var] = d;
            if (eval(*n.body, t, inner)) return true;
        }
        return false;
    }
    bool eval_node(const RealizedAt& n, const Day&, const Env& env) {
        Day shifted = resolve_time(n.at, env);
        trace.ensure_in_horizon(shifted);
        return eval(*n.body, shifted, env);
    }
    bool eval_node(const Rd& n, const Day&, const Env& env) {
        Span s = resolve_span(n.span, env, trace.horizon(), options);
        return eval_rd(*n.body, s, env);
    }
    bool eval_node(const Rt& n, const Day&, const Env& env) {
        Span s = resolve_span(n.span, env, trace.horizon(), options);
        return eval_rt(*n.body, s, env);
    }
    bool eval_node(const Rb& n, const Day&, const Env& env) {
        Day before = resolve_time(n.before, env);
        return eval_rb(*n.body, before, env);
    }
    bool eval_node(const Precedes& n, const Day&, const Env& env) {
        return resolve_time(n.earlier, env) < resolve_time(n.later, env);
    }

    bool eval_rd(const Formula& f, const Span& s, const Env& env) {
        if (s.is_empty()) return false;
        for (Day d = s.begin().day(); d <= s.end().day(); d = d.plus_days(1)) {
            if (eval(f, d, env)) return true;
        }
        return false;
    }
    bool eval_rt(const Formula& f, const Span& s, const Env& env) {
        if (s.is_empty()) return true;
        for (Day d = s.begin().day(); d <= s.end().day(); d = d.plus_days(1)) {
            if (!eval(f, d, env)) return false;
        }
        return true;
    }
    bool eval_rb(const Formula& f, const Day& before, const Env& env) {
        const Span& horizon = trace.horizon();
        if (TimePoint(before) < horizon.begin()) {
            throw OutOfHorizon("realized-before day " + before.iso() +
                               " precedes the trace horizon " + horizon.to_string());
        }
        // SPAN(bottom, D) with the bottom element read as the horizon start
        // and "before day D" strict; the span is clamped to the horizon.
        Span s = Span(horizon.begin(), TimePoint(before.plus_days(-1))).clamp_to(horizon);
        return eval_rd(f, s, env);
    }
};

Span checked_span(const Span& requested, const Span& horizon, const EvalOptions& options) {
    if (requested.is_empty()) return requested;
    Span clamped = requested.clamp_to(horizon);
    if (!options.clamp_spans) {
        const bool begin_outside =
            requested.begin().is_finite() && requested.begin() < horizon.begin();
        const bool end_outside = requested.end().is_finite() && requested.end() > horizon.end();
        if (begin_outside || end_outside) {
            throw OutOfHorizon("span " + requested.to_string() + " exceeds the trace horizon " +
                               horizon.to_string());
        }
    }
    return clamped;
}

}  // namespace

Day resolve_time(const TimeExpr& expr, const Env& env) {
    Day base;
    if (const auto* lit = std::get_if<TimeExpr::Literal>(&expr.base)) {
        base = lit->day;
    } else {
        const auto& var = std::get<TimeExpr::Var>(expr.base);
        auto it = env.find(var.name);
        if (it == env.end()) throw UnboundVariable("unbound time variable: " + var.name);
        if (const auto* day = std::get_if<Day>(&it->second)) {
            base = *day;
        } else {
            base = std::get<DateBag>(it->second).effective_day();  // IndeterminateBag if open
        }
    }
    return base.plus_days(expr.offset_days);
}

Span resolve_span(const SpanExpr& expr, const Env& env, const Span& horizon,
                  const EvalOptions& options) {
    auto bound = [&](const SpanBound& b, const TimePoint& extreme) -> TimePoint {
        switch (b.kind) {
            case SpanBound::Kind::NegInf:
            case SpanBound::Kind::PosInf:
                return extreme;
            default:
                return TimePoint(resolve_time(b.time, env));
        }
    };
    Span requested(bound(expr.begin, TimePoint::neg_infinity()),
                   bound(expr.end, TimePoint::pos_infinity()));
    // Extremes always clamp to the horizon; finite out-of-horizon endpoints
    // clamp only when the caller opted in.
    return checked_span(requested, horizon, options);
}

bool realized_at(const Trace& trace, const Formula& f, const Day& t, const Env& env,
                 const EvalOptions& options, Transcript* transcript) {
    trace.ensure_in_horizon(t);
    Evaluator ev{trace, options, transcript};
    return ev.eval(f, t, env);
}

bool rd(const Trace& trace, const Formula& f, const Span& span, const Env& env,
        const EvalOptions& options, Transcript* transcript) {
    Evaluator ev{trace, options, transcript};
    return ev.eval_rd(f, checked_span(span, trace.horizon(), options), env);
}

bool rt(const Trace& trace, const Formula& f, const Span& span, const Env& env,
        const EvalOptions& options, Transcript* transcript) {
    Evaluator ev{trace, options, transcript};
    return ev.eval_rt(f, checked_span(span, trace.horizon(), options), env);
}

bool rb(const Trace& trace, const Formula& f, const Day& before, const Env& env,
        const EvalOptions& options, Transcript* transcript) {
    Evaluator ev{trace, options, transcript};
    return ev.eval_rb(f, before, env);
}

}  // namespace cte
