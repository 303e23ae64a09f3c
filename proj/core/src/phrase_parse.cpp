#include <cctype>
#include <charconv>

#include "cte/phrase.hpp"

namespace cte {

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected,
                         const std::string& message)
    : Error(message + " (at byte " + std::to_string(position) + ")"),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

struct Token {
    enum class Kind { Date, Number, Word, LParen, RParen, LBracket, RBracket, End };
    Kind kind = Kind::End;
    std::string text;   // original spelling
    std::string lower;  // lowercased, for keyword matching
    std::size_t offset = 0;
    Day date;
    std::int64_t number = 0;
};

std::string to_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

bool looks_like_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++i;
            continue;
        }
        Token tok;
        tok.offset = i;
        if (c == '(') {
            tok.kind = Token::Kind::LParen;
            tok.text = "(";
            ++i;
        } else if (c == ')') {
            tok.kind = Token::Kind::RParen;
            tok.text = ")";
            ++i;
        } else if (c == '[') {
            tok.kind = Token::Kind::LBracket;
            tok.text = "[";
            ++i;
        } else if (c == ']') {
            tok.kind = Token::Kind::RBracket;
            tok.text = "]";
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '-')) {
                ++j;
            }
            std::string_view span = text.substr(i, j - i);
            if (looks_like_date(span)) {
                tok.kind = Token::Kind::Date;
                tok.text = std::string(span);
                tok.date = Day::from_iso(span);
            } else {
                // plain number: digits only
                j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                span = text.substr(i, j - i);
                tok.kind = Token::Kind::Number;
                tok.text = std::string(span);
                std::from_chars(span.data(), span.data() + span.size(), tok.number);
            }
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_' || text[j] == '\'')) {
                ++j;
            }
            tok.kind = Token::Kind::Word;
            tok.text = std::string(text.substr(i, j - i));
            tok.lower = to_lower(tok.text);
            i = j;
        } else {
            throw SyntaxError(i, {"a date", "a number", "a word"},
                              std::string("unexpected character '") + c + "'");
        }
        tokens.push_back(std::move(tok));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.offset = text.size();
    tokens.push_back(std::move(end));
    return tokens;
}

struct Parser {
    std::vector<Token> tokens;
    std::size_t pos = 0;

    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t at = pos + ahead;
        return at < tokens.size() ? tokens[at] : tokens.back();
    }
    const Token& advance() { return tokens[pos < tokens.size() - 1 ? pos++ : pos]; }

    bool at_word(std::string_view w, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == Token::Kind::Word && t.lower == w;
    }
    bool at_words(std::initializer_list<std::string_view> words) const {
        std::size_t ahead = 0;
        for (std::string_view w : words) {
            if (!at_word(w, ahead++)) return false;
        }
        return true;
    }
    bool accept_word(std::string_view w) {
        if (!at_word(w)) return false;
        advance();
        return true;
    }
    bool accept_words(std::initializer_list<std::string_view> words) {
        if (!at_words(words)) return false;
        pos += words.size();
        return true;
    }
    void expect_word(std::string_view w) {
        if (!accept_word(w)) fail({std::string(w)});
    }

    [[noreturn]] void fail(std::vector<std::string> expected,
                           const std::string& note = "") const {
        const Token& t = peek();
        std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
        std::string message = "expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) message += expected.size() == 2 ? " or " : ", ";
            message += expected[i];
        }
        message += ", got " + got;
        if (!note.empty()) message += "; " + note;
        throw SyntaxError(t.offset, std::move(expected), message);
    }

    std::string expect_identifier(const std::string& what) {
        const Token& t = peek();
        if (t.kind != Token::Kind::Word) fail({what});
        return advance().text;
    }

    std::int64_t expect_number(const std::string& what) {
        const Token& t = peek();
        if (t.kind != Token::Kind::Number) fail({what});
        return advance().number;
    }

    void expect_day_unit() {
        if (!accept_word("days") && !accept_word("day")) fail({"days"});
    }

    OffsetDirection expect_direction() {
        if (accept_word("after") || accept_word("following")) return OffsetDirection::After;
        if (accept_word("before")) return OffsetDirection::Before;
        fail({"after", "before"});
    }

    // first..fifth
    std::optional<int> accept_ordinal() {
        static const std::pair<const char*, int> ordinals[] = {
            {"first", 1}, {"second", 2}, {"third", 3}, {"fourth", 4}, {"fifth", 5}};
        for (const auto& [word, value] : ordinals) {
            if (accept_word(word)) return value;
        }
        return std::nullopt;
    }

    std::optional<Weekday> accept_weekday() {
        const Token& t = peek();
        if (t.kind != Token::Kind::Word) return std::nullopt;
        try {
            Weekday w = weekday_from_string(t.lower);
            advance();
            return w;
        } catch (const InvalidDate&) {
            return std::nullopt;
        }
    }

    bool at_reasonableness_adverb() const {
        return at_word("promptly") || at_word("timely") ||
               at_words({"as", "soon", "as", "reasonably", "practicable"});
    }
    std::string expect_reasonableness_adverb() {
        if (accept_word("promptly")) return "promptly";
        if (accept_word("timely")) return "timely";
        if (accept_words({"as", "soon", "as", "reasonably", "practicable"})) {
            return "as soon as reasonably practicable";
        }
        fail({"promptly", "timely", "as soon as reasonably practicable"});
    }

    // ------------------------------------------------------------------
    // Anchors: the date-valued leaves admitted inside other productions.

    bool anchor_ahead() const {
        const Token& t = peek();
        if (t.kind == Token::Kind::Date) return true;
        if (t.kind == Token::Kind::Word) {
            if (at_words({"the", "date", "specified"}) || at_words({"the", "date", "designated"}) ||
                at_words({"the", "occurrence", "of"}) || at_words({"the", "end", "of"})) {
                return true;
            }
            return t.lower != "the";  // a bare name
        }
        return false;
    }

    PhrasePtr parse_anchor(const std::string& what = "a date") {
        const Token& t = peek();
        if (t.kind == Token::Kind::LParen) {
            throw NestedAlternativeError(
                t.offset, {"a single date"},
                "alternative dates may not be nested inside a comparison; "
                "this construction has no settled reading");
        }
        if (t.kind == Token::Kind::Date) {
            advance();
            return make_phrase(DateLiteralNode{t.date});
        }
        if (t.kind != Token::Kind::Word) fail({what});
        if (accept_words({"the", "date", "specified", "as"})) {
            return make_phrase(SpecifiedDateNode{expect_identifier("a name")});
        }
        if (accept_words({"the", "date", "designated", "as"})) {
            return make_phrase(DesignatedDateNode{expect_identifier("a name")});
        }
        if (accept_words({"the", "occurrence", "of", "event"})) {
            return make_phrase(OccurrenceNode{expect_identifier("an event"), EventEndpoint::Start});
        }
        if (accept_words({"the", "end", "of", "event"})) {
            return make_phrase(OccurrenceNode{expect_identifier("an event"), EventEndpoint::End});
        }
        if (t.lower == "the") fail({what});
        advance();
        return make_phrase(NamedDateNode{t.text});
    }

    bool is_anchor_node(const PhrasePtr& p) const {
        return std::holds_alternative<DateLiteralNode>(p->node) ||
               std::holds_alternative<NamedDateNode>(p->node) ||
               std::holds_alternative<SpecifiedDateNode>(p->node) ||
               std::holds_alternative<DesignatedDateNode>(p->node) ||
               std::holds_alternative<OccurrenceNode>(p->node);
    }

    // ------------------------------------------------------------------

    PhrasePtr parse_root() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Date:
                return parse_anchor();
            case Token::Kind::Number:
                return parse_offset();
            case Token::Kind::LParen:
                return parse_group();
            case Token::Kind::Word:
                break;
            default:
                fail({"a phrase"});
        }

        if (at_word("at")) return parse_at();
        if (at_word("the")) return parse_the();
        if (at_word("all")) return parse_all_days();
        if (at_word("every")) return parse_every();
        if (at_words({"with", "effect", "from"})) return parse_with_effect_from();
        if (at_words({"for", "so", "long", "as"}) || at_words({"so", "long", "as"})) {
            return parse_so_long_as();
        }
        if (at_words({"to", "maintain"})) return parse_maintain();
        if (at_word("on")) return parse_on();
        if (at_word("as")) return parse_as();
        if (at_word("upon")) return parse_upon();
        if (at_word("will")) return parse_will();
        if (at_words({"deferred", "to"})) return parse_deferred_until();
        if (at_words({"no", "more", "than"})) return parse_notice();
        if (at_word("a")) return parse_a();
        if (at_words({"prior", "to"})) {
            pos += 2;
            return make_phrase(ComparisonNode{ComparisonOp::PriorTo, parse_anchor()});
        }
        if (at_words({"after", "giving", "effect"}) || at_words({"after", "taking", "into"})) {
            fail({"a temporal phrase"},
                 "\"after giving effect to\" needs legal disambiguation and is not part of "
                 "the temporal grammar");
        }
        if (at_word("pursuant")) {
            fail({"a temporal phrase"},
                 "\"pursuant to\" needs legal disambiguation and is not part of the "
                 "temporal grammar");
        }
        if (accept_word("following") || accept_word("after")) {
            return make_phrase(ComparisonNode{ComparisonOp::Following, parse_anchor()});
        }
        if (at_word("immediately")) return parse_immediately();
        if (at_word("event")) return parse_event_phrase();
        if (at_word("party")) return parse_party_phrase();
        if (at_words({"in", "such", "event"})) {
            pos += 3;
            return make_phrase(
                EventPhaseNode{expect_identifier("an event"), PhraseEventPhase::HasOccurred});
        }
        if (at_words({"in", "the", "future"})) {
            fail({"a bounded period"},
                 "\"in the future\" has no end date; draft an explicit bound such as "
                 "\"with effect from ... at all times until ...\"");
        }
        if (at_words({"there", "is"})) return parse_there_is();
        if (at_reasonableness_adverb()) return parse_adverb();
        return parse_anchor("a phrase");
    }

    PhrasePtr parse_group() {
        advance();  // (
        std::vector<PhrasePtr> options;
        options.push_back(parse_group_option());
        while (accept_word("or")) options.push_back(parse_group_option());
        if (peek().kind != Token::Kind::RParen) fail({")", "or"});
        advance();
        return make_phrase(AlternativesNode{std::move(options)});
    }

    PhrasePtr parse_group_option() {
        if (peek().kind == Token::Kind::LParen) {
            throw NestedAlternativeError(peek().offset, {"a single date"},
                                         "alternative groups may not be nested");
        }
        return parse_anchor();
    }

    PhrasePtr parse_offset() {
        const std::int64_t n = expect_number("a day count");
        std::optional<std::string> property;
        if (peek().kind == Token::Kind::Word && !at_word("days") && !at_word("day")) {
            property = expect_identifier("a property name");
        }
        expect_day_unit();
        OffsetDirection dir = expect_direction();
        return make_phrase(OffsetNode{n, dir, std::move(property), parse_anchor()});
    }

    PhrasePtr parse_at() {
        if (accept_words({"at", "least"})) {
            const std::int64_t n = expect_number("a day count");
            expect_day_unit();
            OffsetDirection dir = expect_direction();
            return make_phrase(AtLeastOffsetNode{n, dir, parse_anchor()});
        }
        if (accept_words({"at", "all", "times", "until"})) {
            return make_phrase(AtAllTimesUntilNode{parse_anchor()});
        }
        if (accept_words({"at", "such", "time", "of", "being", "event"})) {
            return make_phrase(OccurrenceNode{expect_identifier("an event"), EventEndpoint::Start});
        }
        fail({"at least", "at all times until"});
    }

    PhrasePtr parse_the() {
        if (accept_words({"the", "first"})) {
            const std::string property = expect_identifier("a property name");
            expect_word("after");
            return make_phrase(FirstWithPropertyNode{property, parse_anchor()});
        }
        if (accept_words({"the", "next", "succeeding"})) {
            const std::string property = expect_identifier("a property name");
            expect_word("after");
            return make_phrase(FirstWithPropertyNode{property, parse_anchor()});
        }
        if (accept_words({"the", "same", "day", "as"})) {
            return make_phrase(ComparisonNode{ComparisonOp::SameDayAs, parse_anchor()});
        }
        if (accept_words({"the", "due", "date", "of"})) {
            return make_phrase(DueDateOfNode{expect_identifier("an obligation")});
        }
        if (accept_words({"the", "last", "payment", "date", "of"}) ||
            accept_words({"the", "last", "exchange", "date", "of"})) {
            const std::string category = expect_identifier("an obligation category");
            expect_word("read");
            expect_word("as");
            LastPaymentReading reading;
            if (accept_words({"most", "recently", "discharged"})) {
                reading = LastPaymentReading::MostRecentDischarged;
            } else if (accept_words({"latest", "due"})) {
                reading = LastPaymentReading::LatestDue;
            } else {
                fail({"most recently discharged", "latest due"});
            }
            return make_phrase(LastPaymentDateNode{category, reading});
        }
        if (at_words({"the", "date", "as", "of", "event"})) {
            pos += 5;
            return make_phrase(OccurrenceNode{expect_identifier("an event"), EventEndpoint::Start});
        }
        // "the date specified as", "the occurrence of event", ...
        return parse_anchor("a date expression");
    }

    PhrasePtr parse_all_days() {
        expect_word("all");
        expect_word("days");
        if (accept_word("within")) {
            const std::int64_t n = expect_number("a day count");
            expect_day_unit();
            expect_word("after");
            return make_phrase(WindowNode{parse_anchor(), 1, n});
        }
        if (accept_word("from")) {
            const std::int64_t lo = expect_number("a day count");
            expect_word("to");
            const std::int64_t hi = expect_number("a day count");
            expect_day_unit();
            expect_word("after");
            return make_phrase(WindowNode{parse_anchor(), lo, hi});
        }
        if (accept_word("after")) {
            expect_word("event");
            const std::string a = expect_identifier("an event");
            expect_word("and");
            expect_word("before");
            expect_word("event");
            const std::string b = expect_identifier("an event");
            return make_phrase(AllDaysBetweenNode{a, b});
        }
        fail({"within", "from", "after event"});
    }

    PhrasePtr parse_every() {
        expect_word("every");
        auto ordinal = accept_ordinal();
        if (!ordinal) fail({"first", "second", "third", "fourth", "fifth"});
        auto weekday = accept_weekday();
        if (!weekday) fail({"a weekday name"});
        expect_word("of");
        expect_word("every");
        expect_word("month");
        expect_word("from");
        PhrasePtr from = parse_anchor();
        expect_word("to");
        PhrasePtr to = parse_anchor();
        return make_phrase(EveryNthWeekdayNode{*ordinal, *weekday, std::move(from), std::move(to)});
    }

    PhrasePtr parse_with_effect_from() {
        pos += 3;
        PhrasePtr anchor = parse_anchor();
        if (accept_words({"at", "all", "times", "until"})) {
            return make_phrase(
                WithEffectFromNode{std::move(anchor), EffectMode::Continuous, parse_anchor()});
        }
        if (peek().kind == Token::Kind::LBracket) {
            advance();
            EffectMode mode;
            if (accept_word("continuous")) {
                mode = EffectMode::Continuous;
            } else if (accept_word("discrete")) {
                mode = EffectMode::Discrete;
            } else {
                fail({"continuous", "discrete"});
            }
            if (peek().kind != Token::Kind::RBracket) fail({"]"});
            advance();
            PhrasePtr until;
            if (accept_word("until")) until = parse_anchor();
            return make_phrase(WithEffectFromNode{std::move(anchor), mode, std::move(until)});
        }
        fail({"[continuous]", "[discrete]", "at all times until"},
             "\"with effect from\" may open a continuous or a discrete period; "
             "annotate which reading is intended");
    }

    PhrasePtr parse_so_long_as() {
        accept_word("for");
        pos += 3;  // so long as
        accept_word("event");
        return make_phrase(SoLongAsNode{expect_identifier("an event")});
    }

    PhrasePtr parse_maintain() {
        pos += 2;  // to maintain
        expect_word("in");
        expect_word("full");
        expect_word("force");
        expect_word("and");
        expect_word("effect");
        expect_word("all");
        return make_phrase(MaintainNode{expect_identifier("a subject")});
    }

    PhrasePtr parse_on() {
        if (accept_words({"on", "or", "as", "soon", "as", "reasonably", "practicable",
                          "following"})) {
            return make_phrase(OnOrAsSoonAsPracticableNode{parse_anchor()});
        }
        if (accept_words({"on", "or", "prior", "to"})) {
            return make_phrase(ComparisonNode{ComparisonOp::OnOrPriorTo, parse_anchor()});
        }
        if (accept_words({"on", "or", "following"}) || accept_words({"on", "or", "after"})) {
            return make_phrase(ComparisonNode{ComparisonOp::OnOrFollowing, parse_anchor()});
        }
        if (accept_words({"on", "any", "day", "from"})) {
            PhrasePtr from = parse_anchor();
            expect_word("to");
            PhrasePtr to = parse_anchor();
            OnAnyDayNode node{std::move(from), std::move(to), std::nullopt, {}};
            if (accept_words({"other", "than"})) {
                if (accept_words({"days", "with", "property"})) {
                    node.excluded_property = expect_identifier("a property name");
                } else {
                    node.excluded_days.push_back(parse_anchor());
                    while (accept_word("or")) node.excluded_days.push_back(parse_anchor());
                }
            }
            return make_phrase(std::move(node));
        }
        fail({"on or as soon as reasonably practicable following", "on or prior to",
              "on or following", "on any day from"});
    }

    PhrasePtr parse_as() {
        if (at_words({"as", "soon", "as", "reasonably", "practicable"})) {
            return parse_adverb();
        }
        if (accept_words({"as", "of", "the", "time", "immediately", "preceding", "event"})) {
            return make_phrase(ImmediatelyNode{true, expect_identifier("an event")});
        }
        fail({"as soon as reasonably practicable", "as of the time immediately preceding"});
    }

    PhrasePtr parse_adverb() {
        const std::string adverb = expect_reasonableness_adverb();
        PhrasePtr anchor;
        if (accept_word("following") || accept_word("after")) anchor = parse_anchor();
        return make_phrase(ReasonablenessAdverbNode{adverb, std::move(anchor)});
    }

    PhrasePtr parse_upon() {
        if (accept_words({"upon", "reasonable", "demand", "of", "event"})) {
            return make_phrase(UponReasonableDemandNode{expect_identifier("an event")});
        }
        if (accept_words({"upon", "the", "occurrence", "of", "event"})) {
            return make_phrase(OccurrenceNode{expect_identifier("an event"), EventEndpoint::Start});
        }
        if (accept_words({"upon", "becoming", "aware", "of", "event"})) {
            // Becoming aware is itself an event with a start date.
            return make_phrase(OccurrenceNode{expect_identifier("an event"), EventEndpoint::Start});
        }
        fail({"upon reasonable demand of event", "upon the occurrence of event"});
    }

    PhrasePtr parse_will() {
        if (accept_words({"will", "survive"})) return make_phrase(SurvivesNode{});
        if (accept_words({"will", "be", "deferred", "to"})) {
            accept_word("and");
            accept_word("will");
            expect_word("not");
            expect_word("be");
            expect_word("due");
            expect_word("until");
            return make_phrase(DeferredUntilNode{parse_anchor()});
        }
        fail({"will survive", "will be deferred to"});
    }

    PhrasePtr parse_deferred_until() {
        pos += 2;  // deferred to
        accept_word("and");
        expect_word("not");
        expect_word("due");
        expect_word("until");
        return make_phrase(DeferredUntilNode{parse_anchor()});
    }

    PhrasePtr parse_notice() {
        pos += 3;  // no more than
        const std::int64_t n = expect_number("a day count");
        expect_day_unit();
        expect_word("notice");
        expect_word("following");
        expect_word("event");
        return make_phrase(NoticeWindowNode{n, PeriodKind::Notice, expect_identifier("an event")});
    }

    PhrasePtr parse_a() {
        if (accept_words({"a", "grace", "period", "of"}) ||
            accept_words({"an", "applicable", "grace", "period", "of"})) {
            return parse_period_tail(PeriodKind::Grace);
        }
        if (accept_words({"a", "waiting", "period", "of"})) {
            return parse_period_tail(PeriodKind::Waiting);
        }
        if (accept_words({"a", "potential", "event", "of"})) {
            return make_phrase(PotentialEventNode{expect_identifier("an event property")});
        }
        fail({"a grace period of", "a waiting period of", "a potential event of"});
    }

    PhrasePtr parse_period_tail(PeriodKind kind) {
        const std::int64_t n = expect_number("a day count");
        expect_day_unit();
        expect_word("following");
        expect_word("event");
        return make_phrase(NoticeWindowNode{n, kind, expect_identifier("an event")});
    }

    PhrasePtr parse_immediately() {
        expect_word("immediately");
        if (accept_word("before") || accept_word("preceding")) {
            expect_word("event");
            return make_phrase(ImmediatelyNode{true, expect_identifier("an event")});
        }
        if (accept_word("following") || accept_word("after")) {
            expect_word("event");
            return make_phrase(ImmediatelyNode{false, expect_identifier("an event")});
        }
        fail({"before", "following"});
    }

    PhrasePtr parse_event_phrase() {
        expect_word("event");
        const std::string id = expect_identifier("an event");
        if (accept_words({"has", "occurred"})) {
            if (accept_words({"and", "is", "continuing"})) {
                return make_phrase(EventPhaseNode{id, PhraseEventPhase::OccurredAndContinuing});
            }
            return make_phrase(EventPhaseNode{id, PhraseEventPhase::HasOccurred});
        }
        if (accept_words({"is", "continuing"})) {
            return make_phrase(EventPhaseNode{id, PhraseEventPhase::IsContinuing});
        }
        if (accept_words({"has", "ceased"})) {
            return make_phrase(EventPhaseNode{id, PhraseEventPhase::HasCeased});
        }
        if (accept_words({"occurs", "prior", "to", "event"})) {
            return make_phrase(OccursPriorToNode{id, expect_identifier("an event")});
        }
        fail({"has occurred", "is continuing", "has ceased", "occurs prior to event"});
    }

    PhrasePtr parse_party_phrase() {
        expect_word("party");
        const std::string party = expect_identifier("a party");
        if (accept_words({"has", "satisfied"})) {
            return make_phrase(HasSatisfiedNode{party, expect_identifier("an obligation")});
        }
        if (accept_words({"has", "taken", "action"})) {
            return make_phrase(HasTakenActionNode{party, expect_identifier("an action event")});
        }
        fail({"has satisfied", "has taken action"});
    }

    PhrasePtr parse_there_is() {
        pos += 2;  // there is
        if (peek().kind == Token::Kind::LBracket && at_word("temporal", 1)) {
            pos += 2;
            if (peek().kind != Token::Kind::RBracket) fail({"]"});
            advance();
            expect_word("event");
            return make_phrase(
                EventPhaseNode{expect_identifier("an event"), PhraseEventPhase::IsContinuing});
        }
        fail({"[temporal]"},
             "\"there is\" must be interpreted in context; only the annotated temporal "
             "form \"there is [temporal] event X\" is supported");
    }
};

}  // namespace

PhrasePtr parse(std::string_view text) {
    Parser parser{lex(text)};

    // Counterfactual constructs are refused wholesale: they call for human
    // judgement, not evaluation.
    for (const Token& t : parser.tokens) {
        if (t.kind == Token::Kind::Word && t.lower == "would") {
            throw CounterfactualError(
                t.offset, {"a non-counterfactual phrase"},
                "counterfactual constructs (\"would occur\", \"would have been\") require "
                "human input and are not modeled");
        }
    }

    PhrasePtr root = parser.parse_root();

    if (parser.at_word("or")) {
        if (!parser.is_anchor_node(root)) {
            throw NestedAlternativeError(
                parser.peek().offset, {"end of input"},
                "alternatives may only combine plain dates; nesting alternatives inside "
                "other temporal phrases has no settled reading");
        }
        std::vector<PhrasePtr> options;
        options.push_back(std::move(root));
        while (parser.accept_word("or")) options.push_back(parser.parse_anchor());
        root = make_phrase(AlternativesNode{std::move(options)});
    }

    if (parser.peek().kind != Token::Kind::End) parser.fail({"end of input"});
    return root;
}

}  // namespace cte
