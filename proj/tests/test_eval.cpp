#include <doctest.h>

#include "cte/eval.hpp"
#include "support/oracles.hpp"

using namespace cte;
using cte::testing::TraceGen;

namespace {
const Day jun1 = make_day(2018, 6, 1);
const Day jun3 = make_day(2018, 6, 3);
const Day jun4 = make_day(2018, 6, 4);
const Day jun5 = make_day(2018, 6, 5);

Trace small_trace() {
    Trace tr(Span(TimePoint(jun1), TimePoint(make_day(2018, 6, 30))));
    tr.record(AtomInstance{"P", {}}, jun3);
    tr.record(AtomInstance{"Q", {}}, jun3);
    tr.record(AtomInstance{"Q", {}}, jun5);
    return tr;
}
}  // namespace

TEST_CASE("negation distributes through realization") {
    Trace tr = small_trace();
    Formula p = Formula::atom("P");
    CHECK(realized_at(tr, p, jun3));
    CHECK_FALSE(realized_at(tr, p, jun4));
    CHECK(realized_at(tr, Formula::negation(p), jun4));
    CHECK(realized_at(tr, Formula::negation(p), jun4) == !realized_at(tr, p, jun4));
}

TEST_CASE("conjunction distributes through realization") {
    Trace tr = small_trace();
    Formula both = Formula::conjunction(Formula::atom("P"), Formula::atom("Q"));
    CHECK(realized_at(tr, both, jun3));
    CHECK_FALSE(realized_at(tr, both, jun5));
    CHECK(realized_at(tr, both, jun5) ==
          (realized_at(tr, Formula::atom("P"), jun5) && realized_at(tr, Formula::atom("Q"), jun5)));
}

TEST_CASE("bounded quantification, vacuously true on the empty domain") {
    Trace tr = small_trace();
    Formula vacuous = Formula::for_all_days("x", DateSet::empty_at(jun1), Formula::atom("P"));
    CHECK(realized_at(tr, vacuous, jun4));

    // forall x in {Jun 3}: Q realized at x.
    Formula all_q = Formula::for_all_days(
        "x", DateSet::of_days({jun3}),
        Formula::realized_at(TimeExpr::var("x"), Formula::atom("Q")));
    CHECK(realized_at(tr, all_q, jun4));
    Formula all_q_wide = Formula::for_all_days(
        "x", DateSet::of_days({jun3, jun4}),
        Formula::realized_at(TimeExpr::var("x"), Formula::atom("Q")));
    CHECK_FALSE(realized_at(tr, all_q_wide, jun4));

    Formula some = Formula::exists_day(
        "x", DateSet::of_days({jun3, jun4}),
        Formula::realized_at(TimeExpr::var("x"), Formula::atom("Q")));
    CHECK(realized_at(tr, some, jun4));
}

TEST_CASE("the precedence relation is strict order on days") {
    Trace tr = small_trace();
    CHECK(realized_at(tr, Formula::precedes(TimeExpr::literal(jun3), TimeExpr::literal(jun4)),
                      jun1));
    CHECK_FALSE(
        realized_at(tr, Formula::precedes(TimeExpr::literal(jun4), TimeExpr::literal(jun4)), jun1));
    // Calendar offsets shift the compared days.
    CHECK(realized_at(
        tr, Formula::precedes(TimeExpr::literal(jun4), TimeExpr::literal(jun3, 2)), jun1));
}

TEST_CASE("realized during, throughout and before a span") {
    Trace tr = small_trace();
    Formula p = Formula::atom("P");
    Formula q = Formula::atom("Q");

    CHECK(rd(tr, p, Span(TimePoint(jun1), TimePoint(jun5))));
    CHECK_FALSE(rd(tr, p, Span(TimePoint(jun4), TimePoint(jun5))));
    CHECK_FALSE(rd(tr, p, Span(TimePoint(jun5), TimePoint(jun4))));  // empty span

    CHECK(rt(tr, Formula::disjunction(q, Formula::negation(q)),
             Span(TimePoint(jun1), TimePoint(jun5))));
    CHECK_FALSE(rt(tr, q, Span(TimePoint(jun3), TimePoint(jun5))));  // missing Jun 4
    CHECK(rt(tr, q, Span(TimePoint(jun5), TimePoint(jun4))));        // vacuous on empty

    CHECK(rb(tr, p, jun4));   // witness on Jun 3
    CHECK_FALSE(rb(tr, p, jun3));  // the day itself is excluded
    CHECK_FALSE(rb(tr, p, jun1));  // empty clamped span at the horizon start
}

TEST_CASE("span construction and clamping") {
    CHECK(Span(TimePoint(jun1), TimePoint(jun5)).day_count() == 5);
    CHECK(Span(TimePoint(jun3), TimePoint(jun3)).day_count() == 1);
    CHECK(Span(TimePoint(jun5), TimePoint(jun1)).is_empty());
    CHECK(Span(TimePoint(jun5), TimePoint(jun1)).begin() == TimePoint(jun5));  // BEG survives

    Trace tr = small_trace();
    // An unbounded lower span bound reads as "from as far back as the record goes".
    Formula ever_p = Formula::rd(
        SpanExpr{SpanBound::neg_infinity(), SpanBound::at(TimeExpr::literal(jun4))},
        Formula::atom("P"));
    CHECK(realized_at(tr, ever_p, jun1));

    // Finite endpoints outside the horizon are errors unless clamping is on.
    const Span outside(TimePoint(make_day(2018, 5, 1)), TimePoint(jun5));
    CHECK_THROWS_AS(rd(tr, Formula::atom("P"), outside), OutOfHorizon);
    EvalOptions clamping;
    clamping.clamp_spans = true;
    CHECK(rd(tr, Formula::atom("P"), outside, {}, clamping));
}

TEST_CASE("queries outside the horizon are errors, not falsehoods") {
    Trace tr = small_trace();
    CHECK_THROWS_AS(realized_at(tr, Formula::atom("P"), make_day(2018, 7, 15)), OutOfHorizon);
    CHECK_THROWS_AS(realized_at(tr, Formula::atom("P"), make_day(2018, 5, 15)), OutOfHorizon);
    CHECK_THROWS_AS(rb(tr, Formula::atom("P"), make_day(2018, 5, 15)), OutOfHorizon);
    // Unrecorded atoms within the horizon are simply not realized.
    CHECK_FALSE(realized_at(tr, Formula::atom("NeverRecorded"), jun4));
}

TEST_CASE("unbound variables and unresolved bags are reported") {
    Trace tr = small_trace();
    Formula at_x = Formula::realized_at(TimeExpr::var("x"), Formula::atom("P"));
    CHECK_THROWS_AS(realized_at(tr, at_x, jun4), UnboundVariable);

    Env env;
    env["x"] = DateBag::of({jun3, jun4});
    CHECK_THROWS_AS(realized_at(tr, at_x, jun4, env), IndeterminateBag);

    env["x"] = DateBag::of({jun3, jun4}).resolve(jun3, jun4, "chosen");
    CHECK(realized_at(tr, at_x, jun4, env));
}

TEST_CASE("the three realization axioms hold on randomized traces") {
    TraceGen gen(101);
    for (int i = 0; i < 300; ++i) {
        Trace tr = gen.random_trace(14, 3);
        const Day t = gen.random_day(tr);
        Formula phi = gen.random_formula(tr, 3, 2);
        Formula psi = gen.random_formula(tr, 3, 2);

        CHECK(realized_at(tr, Formula::negation(phi), t) == !realized_at(tr, phi, t));
        CHECK(realized_at(tr, Formula::conjunction(phi, psi), t) ==
              (realized_at(tr, phi, t) && realized_at(tr, psi, t)));

        const DateSet domain = gen.random_domain(tr);
        Formula body = Formula::realized_at(TimeExpr::var("v"), phi);
        bool all = true;
        for (const Day& d : domain.members()) {
            Env env;
            env["v"] = d;
            all = all && realized_at(tr, body, t, env);
        }
        CHECK(realized_at(tr, Formula::for_all_days("v", domain, body), t) == all);
    }
}

TEST_CASE("evaluator agrees with the brute-force enumerator") {
    TraceGen gen(103);
    for (int i = 0; i < 300; ++i) {
        Trace tr = gen.random_trace(31, 4);
        Formula f = gen.random_formula(tr, 4, 3);
        const Day t = gen.random_day(tr);
        CHECK(realized_at(tr, f, t) == cte::testing::brute_realized(tr, f, t, {}));
    }
}

TEST_CASE("duality and monotonicity of RD/RT") {
    TraceGen gen(107);
    for (int i = 0; i < 300; ++i) {
        Trace tr = gen.random_trace(31, 3);
        Formula f = gen.random_formula(tr, 3, 2);
        const Span d = gen.random_subspan(tr);

        CHECK(rd(tr, f, d) == !rt(tr, Formula::negation(f), d));

        // Widening a span preserves RD; narrowing preserves RT.
        const Span wider = Span(tr.horizon().begin(), tr.horizon().end());
        if (rd(tr, f, d)) CHECK(rd(tr, f, wider));
        if (rt(tr, f, wider)) CHECK(rt(tr, f, d));

        // RB equals brute-force RD over the clamped prefix span.
        const Day before = gen.random_day(tr);
        const Span prefix(tr.horizon().begin(), TimePoint(before.plus_days(-1)));
        CHECK(rb(tr, f, before) == rd(tr, f, prefix.clamp_to(tr.horizon())));
    }
}
