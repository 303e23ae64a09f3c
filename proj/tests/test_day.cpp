#include <doctest.h>

#include <random>

#include "cte/day.hpp"
#include "support/oracles.hpp"

using namespace cte;

TEST_CASE("civil fields round-trip through the ordinal") {
    for (auto [y, m, d] : {std::tuple{2018, 6, 1}, {2000, 2, 29}, {1999, 12, 31}, {1, 1, 1},
                           {1752, 9, 14}, {2400, 2, 29}}) {
        Day day = make_day(y, m, d);
        CHECK(day.year() == y);
        CHECK(day.month() == m);
        CHECK(day.day_of_month() == d);
    }

    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> ordinals(0, 365 * 4000);
    for (int i = 0; i < 2000; ++i) {
        Day day = Day::from_ordinal(ordinals(rng));
        Day back = make_day(day.year(), day.month(), day.day_of_month());
        CHECK(back == day);
    }
}

TEST_CASE("weekday agrees with Zeller's congruence") {
    CHECK(make_day(2018, 6, 1).weekday() == Weekday::Friday);
    CHECK(make_day(2018, 6, 1).weekday() == testing::zeller_weekday(2018, 6, 1));

    std::mt19937 rng(11);
    std::uniform_int_distribution<std::int64_t> ordinals(0, 365 * 4000);
    for (int i = 0; i < 2000; ++i) {
        Day day = Day::from_ordinal(ordinals(rng));
        CHECK(day.weekday() ==
              testing::zeller_weekday(day.year(), day.month(), day.day_of_month()));
        CHECK(day.weekday() == day.plus_days(7).weekday());
    }
}

TEST_CASE("invalid civil dates are rejected") {
    CHECK_NOTHROW(make_day(2000, 2, 29));  // divisible by 400
    CHECK_THROWS_AS(make_day(2018, 2, 29), InvalidDate);
    CHECK_THROWS_AS(make_day(1900, 2, 29), InvalidDate);  // century rule
    CHECK_THROWS_AS(make_day(2018, 2, 30), InvalidDate);
    CHECK_THROWS_AS(make_day(2018, 13, 1), InvalidDate);
    CHECK_THROWS_AS(make_day(2018, 0, 1), InvalidDate);
    CHECK_THROWS_AS(make_day(2018, 4, 31), InvalidDate);
}

TEST_CASE("day arithmetic") {
    const Day jun1 = make_day(2018, 6, 1);
    CHECK(add_days(jun1, 3) == make_day(2018, 6, 4));
    CHECK(add_days(jun1, -1) == make_day(2018, 5, 31));
    CHECK(add_days(make_day(2018, 12, 30), 5) == make_day(2019, 1, 4));
    CHECK(add_days(jun1, 0) == jun1);

    CHECK(diff_days(make_day(2018, 6, 4), jun1) == 3);
    CHECK(diff_days(jun1, jun1) == 0);
    CHECK(diff_days(make_day(2019, 1, 1), make_day(2018, 1, 1)) == 365);

    // add_days is a group action and inverts diff_days.
    std::mt19937 rng(13);
    std::uniform_int_distribution<std::int64_t> ordinals(1000, 900000);
    std::uniform_int_distribution<std::int64_t> deltas(-5000, 5000);
    for (int i = 0; i < 1000; ++i) {
        Day d = Day::from_ordinal(ordinals(rng));
        std::int64_t a = deltas(rng), b = deltas(rng);
        CHECK(add_days(add_days(d, a), b) == add_days(d, a + b));
        Day e = Day::from_ordinal(ordinals(rng));
        CHECK(add_days(e, diff_days(d, e)) == d);
        CHECK((d < e) == (diff_days(d, e) < 0));
    }
}

TEST_CASE("ISO-8601 parsing and printing") {
    CHECK(Day::from_iso("2018-06-01") == make_day(2018, 6, 1));
    CHECK(make_day(2018, 6, 1).iso() == "2018-06-01");
    CHECK(Day::from_iso("0001-01-01").ordinal() == 0);
    CHECK_THROWS_AS(Day::from_iso("2018-6-1x"), InvalidDate);
    CHECK_THROWS_AS(Day::from_iso("not a date"), InvalidDate);
    CHECK_THROWS_AS(Day::from_iso("2018-02-29"), InvalidDate);
}

TEST_CASE("extreme time points order but do not compute") {
    const TimePoint lo = TimePoint::neg_infinity();
    const TimePoint hi = TimePoint::pos_infinity();
    const TimePoint mid{make_day(2018, 6, 1)};

    CHECK(lo < mid);
    CHECK(mid < hi);
    CHECK(lo < hi);
    CHECK(lo == TimePoint::neg_infinity());
    CHECK(mid == TimePoint(make_day(2018, 6, 1)));

    CHECK_THROWS_AS(lo.plus_days(1), ExtremeArithmetic);
    CHECK_THROWS_AS(hi.plus_days(-1), ExtremeArithmetic);
    CHECK_THROWS_AS(lo.day(), ExtremeArithmetic);
    CHECK_THROWS_AS(hi.days_since(mid), ExtremeArithmetic);
    CHECK(mid.plus_days(2) == TimePoint(make_day(2018, 6, 3)));
    CHECK(lo.to_string() == "-inf");
    CHECK(hi.to_string() == "+inf");
}
