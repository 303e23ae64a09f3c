#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cte/date_bag.hpp"
#include "cte/date_set.hpp"
#include "cte/day.hpp"

namespace cte {

// One ground fact symbol, e.g. paid(PartyA). Atoms are compared
// structurally; key() is the canonical "name(arg,...)" spelling.
struct AtomInstance {
    std::string name;
    std::vector<std::string> args;

    std::string key() const;
    auto operator<=>(const AtomInstance&) const = default;
};

// A day-valued expression: a literal day or a bound variable, optionally
// shifted by a number of days (the calendar reading of "n days later").
struct TimeExpr {
    struct Literal {
        Day day;
        bool operator==(const Literal&) const = default;
    };
    struct Var {
        std::string name;
        bool operator==(const Var&) const = default;
    };

    std::variant<Literal, Var> base;
    std::int64_t offset_days = 0;

    static TimeExpr literal(const Day& d, std::int64_t offset = 0) {
        return TimeExpr{Literal{d}, offset};
    }
    static TimeExpr var(std::string name, std::int64_t offset = 0) {
        return TimeExpr{Var{std::move(name)}, offset};
    }
    bool operator==(const TimeExpr&) const = default;
};

// Span endpoints admit the extreme points; at evaluation time an extreme
// endpoint clamps to the trace horizon.
struct SpanBound {
    enum class Kind { NegInf, Time, PosInf };
    Kind kind = Kind::Time;
    TimeExpr time;  // meaningful when kind == Time

    static SpanBound neg_infinity() { return SpanBound{Kind::NegInf, {}}; }
    static SpanBound pos_infinity() { return SpanBound{Kind::PosInf, {}}; }
    static SpanBound at(TimeExpr t) { return SpanBound{Kind::Time, std::move(t)}; }
    bool operator==(const SpanBound&) const = default;
};

struct SpanExpr {
    SpanBound begin;
    SpanBound end;
    bool operator==(const SpanExpr&) const = default;
};

// A day-granular evaluation interval with inclusive endpoints; empty when
// end < begin. The stored endpoints survive normalization so BEG/END stay
// queryable on empty spans.
class Span {
public:
    Span() : begin_(TimePoint::neg_infinity()), end_(TimePoint::pos_infinity()) {}
    Span(TimePoint begin, TimePoint end) : begin_(begin), end_(end) {}

    TimePoint begin() const { return begin_; }
    TimePoint end() const { return end_; }
    bool is_empty() const { return end_ < begin_; }

    bool covers(const Day& d) const {
        return !is_empty() && begin_ <= TimePoint(d) && TimePoint(d) <= end_;
    }
    // Both endpoints finite (required before enumeration).
    bool is_finite() const { return begin_.is_finite() && end_.is_finite(); }
    std::int64_t day_count() const;  // finite spans only

    Span clamp_to(const Span& bounds) const;

    std::string to_string() const;
    bool operator==(const Span&) const = default;

private:
    TimePoint begin_;
    TimePoint end_;
};

inline Span make_span(TimePoint begin, TimePoint end) { return Span(begin, end); }
inline Span span(TimePoint begin, TimePoint end) { return Span(begin, end); }

class Formula;

struct Atom {
    AtomInstance atom;
};
struct Not {
    std::shared_ptr<const Formula> body;
};
struct And {
    std::shared_ptr<const Formula> lhs, rhs;
};
struct Or {
    std::shared_ptr<const Formula> lhs, rhs;
};
struct ForAllDays {
    std::string var;
    DateSet domain;
    std::shared_ptr<const Formula> body;
};
struct ExistsDay {
    std::string var;
    DateSet domain;
    std::shared_ptr<const Formula> body;
};
struct RealizedAt {  // R_t(body) with t an expression
    TimeExpr at;
    std::shared_ptr<const Formula> body;
};
struct Rd {  // realized at least once during the span
    SpanExpr span;
    std::shared_ptr<const Formula> body;
};
struct Rt {  // realized throughout the span
    SpanExpr span;
    std::shared_ptr<const Formula> body;
};
struct Rb {  // realized before the given day
    TimeExpr before;
    std::shared_ptr<const Formula> body;
};
struct Precedes {  // the U relation: earlier < later
    TimeExpr earlier;
    TimeExpr later;
};

using FormulaNode =
    std::variant<Atom, Not, And, Or, ForAllDays, ExistsDay, RealizedAt, Rd, Rt, Rb, Precedes>;

// Immutable formula tree with cheap value copies.
class Formula {
public:
    explicit Formula(FormulaNode node)
        : node_(std::make_shared<const FormulaNode>(std::move(node))) {}

    const FormulaNode& node() const { return *node_; }

    static Formula atom(std::string name, std::vector<std::string> args = {});
    static Formula negation(Formula f);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula disjunction(Formula lhs, Formula rhs);
    static Formula for_all_days(std::string var, DateSet domain, Formula body);
    static Formula exists_day(std::string var, DateSet domain, Formula body);
    static Formula realized_at(TimeExpr at, Formula body);
    static Formula rd(SpanExpr span, Formula body);
    static Formula rt(SpanExpr span, Formula body);
    static Formula rb(TimeExpr before, Formula body);
    static Formula precedes(TimeExpr earlier, TimeExpr later);

private:
    std::shared_ptr<const FormulaNode> node_;
};

// Values a time variable may carry: a day, or a bag standing in for one.
using TimeBinding = std::variant<Day, DateBag>;
using Env = std::map<std::string, TimeBinding>;

}  // namespace cte
