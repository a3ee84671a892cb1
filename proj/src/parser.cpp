#include "kpi/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "kpi/errors.hpp"

namespace kpi {

namespace {

enum class Tok { Ident, Bot, Not, And, Or, Implies, Iff, Box, Diamond, LParen, RParen, End };

const char* spelling(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::Bot: return "'bot'";
        case Tok::Not: return "'~'";
        case Tok::And: return "'&'";
        case Tok::Or: return "'|'";
        case Tok::Implies: return "'->'";
        case Tok::Iff: return "'<->'";
        case Tok::Box: return "'[]'";
        case Tok::Diamond: return "'<>'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Token t{Tok::End, {}, line_, col_};
            if (pos_ >= src_.size()) {
                out.push_back(t);
                return out;
            }
            char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                    advance();
                t.text = std::string(src_.substr(start, pos_ - start));
                t.kind = t.text == "bot" ? Tok::Bot : Tok::Ident;
            } else if (match("<->")) {
                t.kind = Tok::Iff;
            } else if (match("<>")) {
                t.kind = Tok::Diamond;
            } else if (match("->")) {
                t.kind = Tok::Implies;
            } else if (match("[]")) {
                t.kind = Tok::Box;
            } else if (c == '~' || c == '&' || c == '|' || c == '(' || c == ')') {
                advance();
                t.kind = c == '~'   ? Tok::Not
                         : c == '&' ? Tok::And
                         : c == '|' ? Tok::Or
                         : c == '(' ? Tok::LParen
                                    : Tok::RParen;
            } else {
                throw ParseError(line_, col_, {}, std::string("unexpected character '") + c + "'");
            }
            out.push_back(std::move(t));
        }
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
    }
    bool match(std::string_view lit) {
        if (src_.substr(pos_, lit.size()) != lit) return false;
        for (std::size_t i = 0; i < lit.size(); ++i) advance();
        return true;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Formula parse_all() {
        Formula f = parse_iff();
        if (peek().kind != Tok::End) fail({"'&'", "'|'", "'->'", "'<->'", "end of input"});
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = peek();
        std::string found = t.kind == Tok::Ident ? "identifier '" + t.text + "'" : spelling(t.kind);
        throw ParseError(t.line, t.column, std::move(expected), found);
    }

    Formula parse_iff() {
        Formula lhs = parse_implies();
        if (accept(Tok::Iff)) return Formula::iff(lhs, parse_iff());
        return lhs;
    }
    Formula parse_implies() {
        Formula lhs = parse_or();
        if (accept(Tok::Implies)) return Formula::implies(lhs, parse_implies());
        return lhs;
    }
    Formula parse_or() {
        Formula acc = parse_and();
        while (accept(Tok::Or)) acc = Formula::disj(acc, parse_and());
        return acc;
    }
    Formula parse_and() {
        Formula acc = parse_unary();
        while (accept(Tok::And)) acc = Formula::conj(acc, parse_unary());
        return acc;
    }
    Formula parse_unary() {
        if (accept(Tok::Not)) return Formula::negate(parse_unary());
        if (accept(Tok::Box)) return Formula::box(parse_unary());
        if (accept(Tok::Diamond)) return Formula::diamond(parse_unary());
        return parse_atom();
    }
    Formula parse_atom() {
        const Token& t = peek();
        if (t.kind == Tok::Ident) {
            ++pos_;
            return Formula::var(t.text);
        }
        if (accept(Tok::Bot)) return Formula::bottom();
        if (accept(Tok::LParen)) {
            Formula inner = parse_iff();
            if (!accept(Tok::RParen)) fail({"')'", "'&'", "'|'", "'->'", "'<->'"});
            return inner;
        }
        fail({"identifier", "'bot'", "'~'", "'[]'", "'<>'", "'('"});
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(Lexer(text).run()).parse_all(); }

}  // namespace kpi
