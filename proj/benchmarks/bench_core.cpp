#include <benchmark/benchmark.h>

#include "cte/calendar.hpp"
#include "cte/eval.hpp"
#include "cte/phrase.hpp"
#include "cte/replay.hpp"

using namespace cte;

namespace {

PropertyCalendar business_calendar() {
    PropertyCalendar cal;
    WeekdayRule weekdays;
    weekdays.weekdays = {Weekday::Monday, Weekday::Tuesday, Weekday::Wednesday, Weekday::Thursday,
                         Weekday::Friday};
    weekdays.holidays = {make_day(2018, 12, 25)};
    cal.define("GeneralBusinessDay", weekdays);
    return cal;
}

Trace dense_trace(int days, int atoms) {
    const Day base = make_day(2018, 1, 1);
    Trace tr(Span(TimePoint(base), TimePoint(base.plus_days(days - 1))));
    for (int a = 0; a < atoms; ++a) {
        for (int d = 0; d < days; d += a + 2) {
            tr.record(AtomInstance{"p" + std::to_string(a), {}}, base.plus_days(d));
        }
    }
    return tr;
}

Scenario late_payment() {
    Scenario sc;
    sc.id = "bench";
    sc.horizon = Span(TimePoint(make_day(2018, 6, 1)), TimePoint(make_day(2018, 6, 30)));
    ObligationDecl pay;
    pay.id = "Pay1";
    pay.category = "Payment";
    pay.incurred_at = make_day(2018, 6, 1);
    pay.due = DateSpec{make_day(2018, 6, 10)};
    sc.obligations.push_back(pay);
    sc.steps.push_back(Step{make_day(2018, 6, 11), DischargeStep{"Pay1"}});
    return sc;
}

void BM_FirstBusinessDayAfter(benchmark::State& state) {
    const PropertyCalendar cal = business_calendar();
    const Day friday = make_day(2018, 6, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cal.first_with_property_after(friday, "GeneralBusinessDay"));
    }
}
BENCHMARK(BM_FirstBusinessDayAfter);

void BM_CountBusinessDaysYear(benchmark::State& state) {
    const PropertyCalendar cal = business_calendar();
    for (auto _ : state) {
        benchmark::DoNotOptimize(cal.count_days_with_property(
            make_day(2018, 1, 1), make_day(2018, 12, 31), "GeneralBusinessDay"));
    }
}
BENCHMARK(BM_CountBusinessDaysYear);

void BM_RealizedAtNestedFormula(benchmark::State& state) {
    const Trace tr = dense_trace(static_cast<int>(state.range(0)), 4);
    // RD over the whole horizon of a conjunction with a negation inside.
    Formula f = Formula::rd(
        SpanExpr{SpanBound::neg_infinity(), SpanBound::pos_infinity()},
        Formula::conjunction(Formula::atom("p0"),
                             Formula::negation(Formula::atom("p3"))));
    const Day t = tr.horizon().begin().day();
    for (auto _ : state) {
        benchmark::DoNotOptimize(realized_at(tr, f, t));
    }
}
BENCHMARK(BM_RealizedAtNestedFormula)->Arg(31)->Arg(366);

void BM_ParsePhrase(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            parse("every first Monday of every month from 2018-01-01 to 2018-12-31"));
    }
}
BENCHMARK(BM_ParsePhrase);

void BM_ReplayLatePayment(benchmark::State& state) {
    const Scenario sc = late_payment();
    const PropertyCalendar cal = business_calendar();
    const ReasonablenessConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(replay(sc, cal, cfg));
    }
}
BENCHMARK(BM_ReplayLatePayment);

}  // namespace

BENCHMARK_MAIN();
