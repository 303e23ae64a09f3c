#include "cte/formula.hpp"

#include "cte/errors.hpp"

namespace cte {

std::string AtomInstance::key() const {
    std::string out = name;
    out.push_back('(');
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out.push_back(',');
        out += args[i];
    }
    out.push_back(')');
    return out;
}

std::int64_t Span::day_count() const {
    if (is_empty()) return 0;
    if (!is_finite()) throw ExtremeArithmetic("cannot count days of an unbounded span");
    return end_.day().days_since(begin_.day()) + 1;
}

Span Span::clamp_to(const Span& bounds) const {
    return Span(std::max(begin_, bounds.begin()), std::min(end_, bounds.end()));
}

std::string Span::to_string() const {
    return begin_.to_string() + ".." + end_.to_string();
}

Formula Formula::atom(std::string name, std::vector<std::string> args) {
    return Formula(Atom{AtomInstance{std::move(name), std::move(args)}});
}
Formula Formula::negation(Formula f) {
    return Formula(Not{std::make_shared<const Formula>(std::move(f))});
}
Formula Formula::conjunction(Formula lhs, Formula rhs) {
    return Formula(And{std::make_shared<const Formula>(std::move(lhs)),
                       std::make_shared<const Formula>(std::move(rhs))});
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
    return Formula(Or{std::make_shared<const Formula>(std::move(lhs)),
                      std::make_shared<const Formula>(std::move(rhs))});
}
Formula Formula::for_all_days(std::string var, DateSet domain, Formula body) {
    return Formula(ForAllDays{std::move(var), std::move(domain),
                              std::make_shared<const Formula>(std::move(body))});
}
Formula Formula::exists_day(std::string var, DateSet domain, Formula body) {
    return Formula(ExistsDay{std::move(var), std::move(domain),
                             std::make_shared<const Formula>(std::move(body))});
}
Formula Formula::realized_at(TimeExpr at, Formula body) {
    return Formula(RealizedAt{std::move(at), std::make_shared<const Formula>(std::move(body))});
}
Formula Formula::rd(SpanExpr span, Formula body) {
    return Formula(Rd{std::move(span), std::make_shared<const Formula>(std::move(body))});
}
Formula Formula::rt(SpanExpr span, Formula body) {
    return Formula(Rt{std::move(span), std::make_shared<const Formula>(std::move(body))});
}
Formula Formula::rb(TimeExpr before, Formula body) {
    return Formula(Rb{std::move(before), std::make_shared<const Formula>(std::move(body))});
}
Formula Formula::precedes(TimeExpr earlier, TimeExpr later) {
    return Formula(Precedes{std::move(earlier), std::move(later)});
}

}  // namespace cte
