#include <doctest.h>

#include <random>

#include "cte/lifecycle.hpp"
#include "cte/errors.hpp"

using namespace cte;

namespace {

Day jun(int d) { return make_day(2018, 6, d); }

ContractState base_state() {
    ContractState st;
    st.as_of = jun(30);
    st.agreement_term =
        ContinuousInterval::between(TimePoint(make_day(2018, 5, 31)), TimePoint(make_day(2019, 1, 1)));
    Event def;
    def.id = "Default";
    def.properties = {"EventOfDefault"};
    st.events.emplace("Default", std::move(def));
    return st;
}

ObligationSpec payment_spec(const std::string& id, const Day& incurred, const Day& due) {
    ObligationSpec spec;
    spec.id = id;
    spec.category = "Payment";
    spec.obligor = "PartyA";
    spec.obligee = "PartyB";
    spec.incurred_at = incurred;
    spec.due = due;
    return spec;
}

}  // namespace

TEST_CASE("event phases") {
    ContractState st = base_state();
    st = set_event_start(std::move(st), "Default", jun(3));

    auto phase = event_phase(st, "Default", jun(4));
    CHECK(phase.has_occurred);
    CHECK(phase.is_continuing);
    CHECK_FALSE(phase.has_ceased);
    CHECK(phase.phase == EventPhaseKind::Occurring);

    st = set_event_end(std::move(st), "Default", jun(5));
    phase = event_phase(st, "Default", jun(6));
    CHECK(phase.has_occurred);
    CHECK_FALSE(phase.is_continuing);
    CHECK(phase.has_ceased);
    CHECK(phase.phase == EventPhaseKind::Ceased);

    // Before anything started: all false.
    Event idle;
    idle.id = "Idle";
    auto none = event_phase(idle, jun(10));
    CHECK_FALSE(none.has_occurred);
    CHECK_FALSE(none.is_continuing);
    CHECK_FALSE(none.has_ceased);
    CHECK(none.phase == EventPhaseKind::NotOccurred);

    CHECK_THROWS_AS(event_phase(st, "NoSuchEvent", jun(4)), UnknownEvent);
    CHECK_THROWS_AS(event_phase(st, "Default", make_day(2018, 7, 15)), FutureQuery);

    // Exactly one phase holds at every day.
    for (int d = 1; d <= 30; ++d) {
        auto p = event_phase(st, "Default", jun(d));
        int only_one = int(p.phase == EventPhaseKind::NotOccurred) +
                       int(p.phase == EventPhaseKind::Occurring) +
                       int(p.phase == EventPhaseKind::Ceased);
        CHECK(only_one == 1);
        CHECK((p.phase == EventPhaseKind::Occurring) == (p.has_occurred && p.is_continuing));
    }
}

TEST_CASE("event dates set once, supersede the schedule, and order pairwise") {
    ContractState st = base_state();
    Event scheduled;
    scheduled.id = "Notice";
    scheduled.scheduled_start = ScheduledStart{jun(10)};
    st.events.emplace("Notice", std::move(scheduled));

    st = set_event_start(std::move(st), "Notice", jun(12));
    CHECK_FALSE(st.events.at("Notice").scheduled_start.has_value());
    CHECK_THROWS_AS(set_event_start(base_state(), "NoSuchEvent", jun(1)), UnknownEvent);
    CHECK_THROWS_AS(set_event_start(std::move(st), "Notice", jun(13)), EventDateAlreadySet);

    Event a, b;
    a.id = "A";
    b.id = "B";
    a.actual_start = jun(1);
    a.actual_end = jun(3);
    b.actual_start = jun(5);
    auto ordering = event_orderings(a, b);
    CHECK(ordering.a_occurs_prior_to_b == TriState::True);
    CHECK(*ordering.immediately_before_a == make_day(2018, 5, 31));
    REQUIRE(ordering.immediately_after_a.has_value());
    CHECK(ordering.immediately_after_a->members() == std::vector<Day>{jun(3), jun(4)});

    b.actual_start = jun(2);
    CHECK(event_orderings(a, b).a_occurs_prior_to_b == TriState::False);

    Event open_ended;
    open_ended.id = "C";
    open_ended.actual_start = jun(1);
    CHECK(event_orderings(open_ended, b).a_occurs_prior_to_b == TriState::Indeterminate);
    CHECK_FALSE(event_orderings(open_ended, b).immediately_after_a.has_value());
    CHECK_THROWS_AS(immediately_after(open_ended), MissingDate);
    CHECK_THROWS_AS(immediately_before(Event{}), MissingDate);
}

TEST_CASE("incurring an obligation also records the incurring event") {
    ContractState st = base_state();
    auto [next, id] = incur_obligation(std::move(st), payment_spec("Pay1", jun(1), jun(10)));
    st = std::move(next);
    CHECK(id == "Pay1");
    CHECK(st.obligations.count("Pay1") == 1);

    auto phase = event_phase(st, "Pay1.incurred", jun(1));
    CHECK(phase.has_occurred);
    CHECK(event_phase(st, "Pay1.incurred", jun(2)).has_occurred);

    CHECK_THROWS_AS(incur_obligation(std::move(st), payment_spec("Pay2", jun(10), jun(5))),
                    DueDateBeforeIncurred);
}

TEST_CASE("deferral and acceleration append to the revision history") {
    ContractState st = base_state();
    st = incur_obligation(std::move(st), payment_spec("Pay1", jun(1), jun(10))).first;

    st = defer_or_accelerate(std::move(st), "Pay1", jun(20), jun(5), RevisionKind::Deferral,
                             "deferred by agreement");
    CHECK(std::get<Day>(effective_due(st.obligations.at("Pay1"))) == jun(20));
    CHECK(st.obligations.at("Pay1").revisions.size() == 1);

    st = defer_or_accelerate(std::move(st), "Pay1", jun(15), jun(7), RevisionKind::Acceleration,
                             "accelerated on default");
    CHECK(std::get<Day>(effective_due(st.obligations.at("Pay1"))) == jun(15));
    CHECK(st.obligations.at("Pay1").revisions.size() == 2);

    // The history replays to the due date as of any past day.
    const Obligation& ob = st.obligations.at("Pay1");
    CHECK(std::get<Day>(effective_due_at(ob, jun(4))) == jun(10));
    CHECK(std::get<Day>(effective_due_at(ob, jun(5))) == jun(20));
    CHECK(std::get<Day>(effective_due_at(ob, jun(6))) == jun(20));
    CHECK(std::get<Day>(effective_due_at(ob, jun(8))) == jun(15));

    CHECK_THROWS_AS(defer_or_accelerate(std::move(st), "Pay1", make_day(2018, 5, 20), jun(8),
                                        RevisionKind::Acceleration, "too far back"),
                    DueDateBeforeIncurred);
}

TEST_CASE("discharge is terminal") {
    ContractState st = base_state();
    st = incur_obligation(std::move(st), payment_spec("Pay1", jun(1), jun(10))).first;
    st = discharge(std::move(st), "Pay1", jun(9));
    CHECK(*st.obligations.at("Pay1").discharged_at == jun(9));
    CHECK_THROWS_AS(discharge(std::move(st), "Pay1", jun(10)), AlreadyDischarged);

    ContractState st2 = base_state();
    auto spec = payment_spec("Auto1", jun(1), jun(10));
    spec.end_date = jun(15);
    st2 = incur_obligation(std::move(st2), std::move(spec)).first;
    CHECK_THROWS_AS(discharge(std::move(st2), "Auto1", jun(20)), AlreadyDischarged);
    CHECK_THROWS_AS(defer_or_accelerate(std::move(base_state()), "Missing", jun(1), jun(1),
                                        RevisionKind::Deferral, ""),
                    UnknownObligation);
}

TEST_CASE("obligation status walks Pending, Due, Overdue and the discharge endings") {
    Obligation ob;
    ob.id = "Pay";
    ob.incurred_at = jun(1);
    ob.due = jun(10);

    CHECK(obligation_status(ob, jun(5)) == ObligationStatus::Pending);
    CHECK(obligation_status(ob, jun(10)) == ObligationStatus::Due);
    CHECK(obligation_status(ob, jun(11)) == ObligationStatus::Overdue);

    ob.discharged_at = jun(9);
    CHECK(obligation_status(ob, jun(11)) == ObligationStatus::DischargedOnTime);
    ob.discharged_at = jun(12);
    CHECK(obligation_status(ob, jun(12)) == ObligationStatus::DischargedLate);
    CHECK(obligation_status(ob, jun(11)) == ObligationStatus::Overdue);  // not yet discharged

    ob.discharged_at.reset();
    ob.end_date = jun(30);
    CHECK(obligation_status(ob, make_day(2018, 7, 1)) == ObligationStatus::AutoDischarged);
    CHECK(obligation_status(ob, jun(29)) == ObligationStatus::Overdue);

    // Discharge exactly on the due day counts as on time.
    ob.end_date.reset();
    ob.discharged_at = jun(10);
    CHECK(obligation_status(ob, jun(10)) == ObligationStatus::DischargedOnTime);
}

TEST_CASE("status against a bag due date is decided only when provable") {
    Obligation ob;
    ob.id = "Pay";
    ob.incurred_at = jun(1);
    ob.due = DateBag::of({jun(6), jun(7), jun(8)});

    CHECK(obligation_status(ob, jun(2)) == ObligationStatus::Pending);
    CHECK(obligation_status(ob, jun(12)) == ObligationStatus::Overdue);
    CHECK_THROWS_AS(obligation_status(ob, jun(7)), IndeterminateBag);

    ob.due = DateBag::of({jun(6), jun(7), jun(8)}).resolve(jun(7), jun(5), "chosen");
    CHECK(obligation_status(ob, jun(7)) == ObligationStatus::Due);
}

TEST_CASE("status never regresses as the query day advances") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> day(1, 28);
    auto rank = [](ObligationStatus s) {
        switch (s) {
            case ObligationStatus::Pending: return 0;
            case ObligationStatus::Due: return 1;
            case ObligationStatus::Overdue: return 2;
            default: return 3;  // discharge endings are terminal
        }
    };
    for (int i = 0; i < 500; ++i) {
        Obligation ob;
        ob.id = "O";
        ob.incurred_at = jun(1);
        ob.due = jun(day(rng));
        if (rng() % 2) {
            Day set_at = jun(day(rng));
            Day new_due = jun(day(rng));
            if (new_due >= ob.incurred_at) {
                ob.revisions.push_back(DueRevision{new_due, set_at, RevisionKind::Deferral, ""});
            }
        }
        if (rng() % 2) ob.end_date = jun(day(rng));
        if (rng() % 2) {
            Day discharged = jun(day(rng));
            if (!ob.end_date || discharged < *ob.end_date) ob.discharged_at = discharged;
        }
        int last_rank = -1;
        ObligationStatus last_status = ObligationStatus::Pending;
        for (int d = 1; d <= 28; ++d) {
            ObligationStatus s = obligation_status(ob, jun(d));
            CHECK(rank(s) >= last_rank);
            if (rank(s) == 3 && last_rank == 3) CHECK(s == last_status);  // terminal is stable
            last_rank = rank(s);
            last_status = s;
        }
    }
}

TEST_CASE("last payment date depends on the chosen reading") {
    ContractState st = base_state();
    st = incur_obligation(std::move(st), payment_spec("P1", jun(1), jun(1))).first;
    st = incur_obligation(std::move(st), payment_spec("P2", jun(1), make_day(2018, 9, 1))).first;
    st = discharge(std::move(st), "P1", jun(1));
    st = discharge(std::move(st), "P2", jun(8));

    CHECK(last_payment_date(st, "Payment", LastPaymentReading::MostRecentDischarged) == jun(8));
    CHECK(last_payment_date(st, "Payment", LastPaymentReading::LatestDue) ==
          make_day(2018, 9, 1));
    CHECK_THROWS_AS(last_payment_date(st, "Delivery", LastPaymentReading::MostRecentDischarged),
                    NoQualifyingObligation);

    ContractState undischarged = base_state();
    undischarged =
        incur_obligation(std::move(undischarged), payment_spec("P3", jun(1), jun(5))).first;
    CHECK_THROWS_AS(
        last_payment_date(undischarged, "Payment", LastPaymentReading::MostRecentDischarged),
        NoQualifyingObligation);
}

TEST_CASE("satisfaction counts from the discharge day itself") {
    ContractState st = base_state();
    st = incur_obligation(std::move(st), payment_spec("Pay1", jun(1), jun(10))).first;
    CHECK_FALSE(has_satisfied(st, "Pay1", jun(20)));
    st = discharge(std::move(st), "Pay1", jun(3));
    CHECK(has_satisfied(st, "Pay1", jun(5)));
    CHECK(has_satisfied(st, "Pay1", jun(3)));
    CHECK_FALSE(has_satisfied(st, "Pay1", jun(2)));
}

TEST_CASE("rights record every activation and exercise") {
    ContractState st = base_state();
    Right r;
    r.id = "Terminate";
    r.holder = "PartyB";
    r.mode = TriggeredRightMode{"Default"};
    st.rights.emplace("Terminate", std::move(r));

    CHECK_FALSE(right_state(st, "Terminate", jun(1)).active);
    st = activate_right(std::move(st), "Terminate", "Default", jun(1));
    st = exercise_right(std::move(st), "Terminate", 0, jun(6));
    auto state = right_state(st, "Terminate", jun(6));
    CHECK(state.active);
    REQUIRE(state.delays.size() == 1);
    CHECK(*state.delays[0] == 5);

    // A second trigger gets its own activation record and its own delays.
    st = activate_right(std::move(st), "Terminate", "Default", jun(10));
    st = exercise_right(std::move(st), "Terminate", 1, jun(10));
    state = right_state(st, "Terminate", jun(12));
    REQUIRE(state.activations.size() == 2);
    CHECK(*state.delays[1] == 0);

    CHECK_THROWS_AS(exercise_right(std::move(st), "Terminate", 5, jun(12)), NotActivated);

    ContractState st2 = base_state();
    Right cont;
    cont.id = "Inspect";
    cont.mode = ContinuousRightMode{
        ContinuousInterval::between(TimePoint(jun(1)), TimePoint(jun(20)))};
    st2.rights.emplace("Inspect", std::move(cont));
    CHECK(right_state(st2, "Inspect", jun(10)).active);
    CHECK_FALSE(right_state(st2, "Inspect", jun(20)).active);
    CHECK_THROWS_AS(right_state(st2, "Missing", jun(1)), UnknownRight);
}

TEST_CASE("exercises never precede their activation") {
    ContractState st = base_state();
    Right r;
    r.id = "R";
    r.mode = TriggeredRightMode{"Default"};
    st.rights.emplace("R", std::move(r));
    st = activate_right(std::move(st), "R", "Default", jun(10));
    CHECK_THROWS_AS(exercise_right(std::move(st), "R", 0, jun(5)), NotActivated);
}

TEST_CASE("repetition constraints count days, not occurrences") {
    Trace tr(Span(TimePoint(jun(1)), TimePoint(jun(30))));
    const AtomInstance report{"report", {"PartyA"}};
    tr.record(report, jun(3));
    tr.record(report, jun(3));  // same day twice still counts once
    tr.record(report, jun(10));
    tr.record(report, jun(17));

    DateSet window = make_date_set(FilteredRange{nullptr, "all"}, jun(1), jun(30));
    RepetitionConstraint c{report, 2, 4, window};
    auto check = check_repetition(tr, c);
    CHECK(check.count == 3);
    CHECK(check.satisfied);

    RepetitionConstraint none{AtomInstance{"deliver", {}}, 1, std::nullopt, window};
    CHECK_FALSE(check_repetition(tr, none).satisfied);

    RepetitionConstraint exact{report, 3, 3, window};
    CHECK(check_repetition(tr, exact).satisfied);

    // Brute-force day count agrees on all windows up to 62 days.
    Trace wide(Span(TimePoint(jun(1)), TimePoint(jun(1).plus_days(61))));
    std::mt19937 seed_rng(59);
    for (int d = 0; d < 62; ++d) {
        if (seed_rng() % 3 == 0) wide.record(report, jun(1).plus_days(d));
    }
    for (int a = 0; a < 62; ++a) {
        for (int b = a; b < 62; ++b) {
            DateSet w = make_date_set(FilteredRange{nullptr, "all"}, jun(1).plus_days(a),
                                      jun(1).plus_days(b));
            std::int64_t expected = 0;
            for (int d = a; d <= b; ++d) {
                if (wide.facts().count(report) &&
                    wide.facts().at(report).count(jun(1).plus_days(d))) {
                    ++expected;
                }
            }
            CHECK(check_repetition(wide, RepetitionConstraint{report, {}, {}, w}).count ==
                  expected);
        }
    }

    DateSet leaking = make_date_set(FilteredRange{nullptr, "all"}, jun(25), make_day(2018, 7, 5));
    CHECK_THROWS_AS(check_repetition(tr, RepetitionConstraint{report, {}, {}, leaking}),
                    OutOfHorizon);
}

TEST_CASE("survival extends the effective period past the term") {
    const ContinuousInterval term =
        ContinuousInterval::between(TimePoint(jun(1)), TimePoint(jun(30)));
    Obligation ob;
    ob.survives = false;
    CHECK(survival_scope(ob, term) == term);

    ob.survives = true;
    auto scope = survival_scope(ob, term);
    CHECK(scope.contains(TimePoint(make_day(2019, 6, 1))));
    CHECK(survival_scope(ob, term, TimePoint(make_day(2018, 12, 31))).end_point() ==
          TimePoint(make_day(2018, 12, 31)));

    // Even an empty term leaves a queryable scope after its end.
    const ContinuousInterval empty_term =
        ContinuousInterval::between(TimePoint(jun(15)), TimePoint(jun(15)));
    auto post = survival_scope(ob, empty_term);
    CHECK(post.start_point() == empty_term.end_point());
    CHECK(post.contains(TimePoint(make_day(2020, 1, 1))));
}
