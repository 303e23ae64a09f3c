#include "cte/formula_text.hpp"

#include <cctype>
#include <charconv>

#include "cte/phrase.hpp"

namespace cte {
namespace {

struct FTok {
    enum class Kind {
        Ident, Date, Number, LParen, RParen, LBrace, RBrace, Comma, DotDot,
        Plus, Minus, NegInf, PosInf, End
    };
    Kind kind = Kind::End;
    std::string text;
    std::size_t offset = 0;
    Day date;
    std::int64_t number = 0;
};

bool date_at(std::string_view s, std::size_t i) {
    if (i + 10 > s.size()) return false;
    for (std::size_t k : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (!std::isdigit(static_cast<unsigned char>(s[i + k]))) return false;
    }
    return s[i + 4] == '-' && s[i + 7] == '-';
}

std::vector<FTok> flex(std::string_view text) {
    std::vector<FTok> toks;
    std::size_t i = 0;
    auto push = [&](FTok::Kind kind, std::string t, std::size_t at) {
        FTok tok;
        tok.kind = kind;
        tok.text = std::move(t);
        tok.offset = at;
        toks.push_back(std::move(tok));
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (date_at(text, i)) {
            FTok tok;
            tok.kind = FTok::Kind::Date;
            tok.text = std::string(text.substr(i, 10));
            tok.offset = i;
            tok.date = Day::from_iso(tok.text);
            toks.push_back(std::move(tok));
            i += 10;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            FTok tok;
            tok.kind = FTok::Kind::Number;
            tok.text = std::string(text.substr(i, j - i));
            tok.offset = i;
            std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), tok.number);
            toks.push_back(std::move(tok));
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size()) {
                const char ch = text[j];
                if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
                    ++j;
                    continue;
                }
                // Dotted names like Pay1.incurred; ".." stays the span operator.
                if (ch == '.' && j + 1 < text.size() && text[j + 1] != '.' &&
                    (std::isalnum(static_cast<unsigned char>(text[j + 1])) ||
                     text[j + 1] == '_')) {
                    ++j;
                    continue;
                }
                break;
            }
            push(FTok::Kind::Ident, std::string(text.substr(i, j - i)), i);
            i = j;
            continue;
        }
        switch (c) {
            case '(': push(FTok::Kind::LParen, "(", i); ++i; break;
            case ')': push(FTok::Kind::RParen, ")", i); ++i; break;
            case '{': push(FTok::Kind::LBrace, "{", i); ++i; break;
            case '}': push(FTok::Kind::RBrace, "}", i); ++i; break;
            case ',': push(FTok::Kind::Comma, ",", i); ++i; break;
            case '.':
                if (i + 1 < text.size() && text[i + 1] == '.') {
                    push(FTok::Kind::DotDot, "..", i);
                    i += 2;
                } else {
                    throw SyntaxError(i, {".."}, "stray '.' in formula");
                }
                break;
            case '+':
                if (text.substr(i + 1, 3) == "inf") {
                    push(FTok::Kind::PosInf, "+inf", i);
                    i += 4;
                } else {
                    push(FTok::Kind::Plus, "+", i);
                    ++i;
                }
                break;
            case '-':
                if (text.substr(i + 1, 3) == "inf") {
                    push(FTok::Kind::NegInf, "-inf", i);
                    i += 4;
                } else {
                    push(FTok::Kind::Minus, "-", i);
                    ++i;
                }
                break;
            default:
                throw SyntaxError(i, {"a formula token"},
                                  std::string("unexpected character '") + c + "' in formula");
        }
    }
    FTok end;
    end.kind = FTok::Kind::End;
    end.offset = text.size();
    toks.push_back(std::move(end));
    return toks;
}

struct FormulaParser {
    std::vector<FTok> toks;
    std::size_t pos = 0;

    const FTok& peek(std::size_t ahead = 0) const {
        const std::size_t at = pos + ahead;
        return at < toks.size() ? toks[at] : toks.back();
    }
    const FTok& advance() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const FTok& t = peek();
        std::string got = t.kind == FTok::Kind::End ? "end of input" : "'" + t.text + "'";
        std::string message = "expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) message += " or ";
            message += expected[i];
        }
        throw SyntaxError(t.offset, std::move(expected), message + ", got " + got);
    }

    void expect(FTok::Kind kind, const char* what) {
        if (peek().kind != kind) fail({what});
        advance();
    }
    bool accept(FTok::Kind kind) {
        if (peek().kind != kind) return false;
        advance();
        return true;
    }
    bool at_ident(std::string_view word) const {
        return peek().kind == FTok::Kind::Ident && peek().text == word;
    }
    bool accept_ident(std::string_view word) {
        if (!at_ident(word)) return false;
        advance();
        return true;
    }

    Formula parse_or() {
        Formula lhs = parse_and();
        while (accept_ident("or")) lhs = Formula::disjunction(lhs, parse_and());
        return lhs;
    }
    Formula parse_and() {
        Formula lhs = parse_unary();
        while (accept_ident("and")) lhs = Formula::conjunction(lhs, parse_unary());
        return lhs;
    }
    Formula parse_unary() {
        if (accept_ident("not")) return Formula::negation(parse_unary());
        return parse_primary();
    }

    Formula parse_primary() {
        if (accept(FTok::Kind::LParen)) {
            Formula inner = parse_or();
            expect(FTok::Kind::RParen, ")");
            return inner;
        }
        if (peek().kind != FTok::Kind::Ident) fail({"a formula"});
        const std::string head = peek().text;

        if ((head == "rd" || head == "rt") && peek(1).kind == FTok::Kind::LParen) {
            advance();
            advance();
            SpanExpr span = parse_span();
            expect(FTok::Kind::Comma, ",");
            Formula body = parse_or();
            expect(FTok::Kind::RParen, ")");
            return head == "rd" ? Formula::rd(span, body) : Formula::rt(span, body);
        }
        if (head == "rb" && peek(1).kind == FTok::Kind::LParen) {
            advance();
            advance();
            TimeExpr before = parse_time();
            expect(FTok::Kind::Comma, ",");
            Formula body = parse_or();
            expect(FTok::Kind::RParen, ")");
            return Formula::rb(before, body);
        }
        if (head == "at" && peek(1).kind == FTok::Kind::LParen) {
            advance();
            advance();
            TimeExpr when = parse_time();
            expect(FTok::Kind::Comma, ",");
            Formula body = parse_or();
            expect(FTok::Kind::RParen, ")");
            return Formula::realized_at(when, body);
        }
        if (head == "before" && peek(1).kind == FTok::Kind::LParen) {
            advance();
            advance();
            TimeExpr earlier = parse_time();
            expect(FTok::Kind::Comma, ",");
            TimeExpr later = parse_time();
            expect(FTok::Kind::RParen, ")");
            return Formula::precedes(earlier, later);
        }
        if ((head == "forall" || head == "exists") && peek(1).kind == FTok::Kind::LParen) {
            advance();
            advance();
            if (peek().kind != FTok::Kind::Ident) fail({"a variable name"});
            std::string var = advance().text;
            expect(FTok::Kind::Comma, ",");
            DateSet domain = parse_domain();
            expect(FTok::Kind::Comma, ",");
            Formula body = parse_or();
            expect(FTok::Kind::RParen, ")");
            return head == "forall" ? Formula::for_all_days(var, domain, body)
                                    : Formula::exists_day(var, domain, body);
        }
        return parse_atom();
    }

    Formula parse_atom() {
        std::string name = advance().text;
        std::vector<std::string> args;
        expect(FTok::Kind::LParen, "(");
        if (peek().kind != FTok::Kind::RParen) {
            args.push_back(parse_arg());
            while (accept(FTok::Kind::Comma)) args.push_back(parse_arg());
        }
        expect(FTok::Kind::RParen, ")");
        return Formula::atom(std::move(name), std::move(args));
    }

    std::string parse_arg() {
        const FTok& t = peek();
        if (t.kind == FTok::Kind::Ident || t.kind == FTok::Kind::Date ||
            t.kind == FTok::Kind::Number) {
            return advance().text;
        }
        fail({"an argument"});
    }

    TimeExpr parse_time() {
        TimeExpr expr;
        const FTok& t = peek();
        if (t.kind == FTok::Kind::Date) {
            expr.base = TimeExpr::Literal{t.date};
            advance();
        } else if (t.kind == FTok::Kind::Ident) {
            expr.base = TimeExpr::Var{t.text};
            advance();
        } else {
            fail({"a date", "a variable"});
        }
        if (accept(FTok::Kind::Plus)) {
            if (peek().kind != FTok::Kind::Number) fail({"a day count"});
            expr.offset_days = advance().number;
        } else if (accept(FTok::Kind::Minus)) {
            if (peek().kind != FTok::Kind::Number) fail({"a day count"});
            expr.offset_days = -advance().number;
        }
        return expr;
    }

    SpanExpr parse_span() {
        SpanExpr span;
        span.begin = parse_bound();
        expect(FTok::Kind::DotDot, "..");
        span.end = parse_bound();
        return span;
    }

    SpanBound parse_bound() {
        if (accept(FTok::Kind::NegInf)) return SpanBound::neg_infinity();
        if (accept(FTok::Kind::PosInf)) return SpanBound::pos_infinity();
        return SpanBound::at(parse_time());
    }

    DateSet parse_domain() {
        expect(FTok::Kind::LBrace, "{");
        std::vector<Day> days;
        if (peek().kind != FTok::Kind::RBrace) {
            do {
                if (peek().kind != FTok::Kind::Date) fail({"a date"});
                days.push_back(advance().date);
            } while (accept(FTok::Kind::Comma));
        }
        expect(FTok::Kind::RBrace, "}");
        if (days.empty()) return DateSet::empty_at(Day{});
        return DateSet::of_days(std::move(days));
    }
};

struct FormulaFormatter {
    std::string format(const Formula& f) const {
        return std::visit([&](const auto& node) { return fmt(node); }, f.node());
    }

    std::string fmt(const Atom& a) const { return a.atom.key(); }
    std::string fmt(const Not& n) const { return "not " + format(*n.body); }
    std::string fmt(const And& n) const {
        return "(" + format(*n.lhs) + " and " + format(*n.rhs) + ")";
    }
    std::string fmt(const Or& n) const {
        return "(" + format(*n.lhs) + " or " + format(*n.rhs) + ")";
    }
    std::string fmt(const ForAllDays& n) const {
        return "forall(" + n.var + ", " + domain(n.domain) + ", " + format(*n.body) + ")";
    }
    std::string fmt(const ExistsDay& n) const {
        return "exists(" + n.var + ", " + domain(n.domain) + ", " + format(*n.body) + ")";
    }
    std::string fmt(const RealizedAt& n) const {
        return "at(" + format_time(n.at) + ", " + format(*n.body) + ")";
    }
    std::string fmt(const Rd& n) const {
        return "rd(" + format_span(n.span) + ", " + format(*n.body) + ")";
    }
    std::string fmt(const Rt& n) const {
        return "rt(" + format_span(n.span) + ", " + format(*n.body) + ")";
    }
    std::string fmt(const Rb& n) const {
        return "rb(" + format_time(n.before) + ", " + format(*n.body) + ")";
    }
    std::string fmt(const Precedes& n) const {
        return "before(" + format_time(n.earlier) + ", " + format_time(n.later) + ")";
    }

    std::string domain(const DateSet& set) const {
        std::string out = "{";
        for (std::size_t i = 0; i < set.members().size(); ++i) {
            if (i) out += ", ";
            out += set.members()[i].iso();
        }
        return out + "}";
    }
};

}  // namespace

Formula parse_formula(std::string_view text) {
    FormulaParser parser{flex(text)};
    for (const FTok& t : parser.toks) {
        if (t.kind == FTok::Kind::Ident && t.text == "would") {
            throw CounterfactualError(
                t.offset, {"a non-counterfactual formula"},
                "counterfactual constructs (\"would occur\", \"would have been\") require "
                "human input and are not modeled");
        }
    }
    Formula f = parser.parse_or();
    if (parser.peek().kind != FTok::Kind::End) parser.fail({"end of formula"});
    return f;
}

std::string format_formula(const Formula& f) { return FormulaFormatter{}.format(f); }

std::string format_time(const TimeExpr& t) {
    std::string out;
    if (const auto* lit = std::get_if<TimeExpr::Literal>(&t.base)) {
        out = lit->day.iso();
    } else {
        out = std::get<TimeExpr::Var>(t.base).name;
    }
    if (t.offset_days > 0) out += "+" + std::to_string(t.offset_days);
    if (t.offset_days < 0) out += "-" + std::to_string(-t.offset_days);
    return out;
}

std::string format_span(const SpanExpr& s) {
    auto bound = [](const SpanBound& b) -> std::string {
        switch (b.kind) {
            case SpanBound::Kind::NegInf: return "-inf";
            case SpanBound::Kind::PosInf: return "+inf";
            default: return format_time(b.time);
        }
    };
    return bound(s.begin) + ".." + bound(s.end);
}

}  // namespace cte
