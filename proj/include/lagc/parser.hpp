#pragma once

#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lagc/syntax.hpp"
#include "lagc/error.hpp"

namespace lagc {

namespace detail {

struct Token {
    enum class Kind { ident, number, symbol, end } kind;
    std::string text;
    std::size_t line, col;
};

inline const std::set<std::string, std::less<>> keywords = {
    "skip", "if", "then", "fi", "while", "do", "od", "co", "oc", "scope", "input", "guard",
    "end", "call", "program", "method", "main", "true", "false"};

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }

inline std::vector<Token> lex(std::string_view src) {
    static const char* symbols[] = {":=", ";;", "||", "&&", "<=", ">=", "==", ";", "(", ")", "{", "}",
                                    "+", "-", "*", "!", ","};
    std::vector<Token> out;
    std::size_t i = 0, line = 1, col = 1;
    auto adv = [&](std::size_t n) {
        for (; n > 0; --n, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            adv(1);
        } else if (src.substr(i, 2) == "//") {
            while (i < src.size() && src[i] != '\n') adv(1);
        } else if (ident_start(c)) {
            std::size_t j = i + 1;
            // ':' belongs to a name unless it starts ":=".
            while (j < src.size() && (ident_char(src[j]) || (src[j] == ':' && (j + 1 >= src.size() || src[j + 1] != '='))))
                ++j;
            out.push_back({Token::Kind::ident, std::string(src.substr(i, j - i)), line, col});
            adv(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Kind::number, std::string(src.substr(i, j - i)), line, col});
            adv(j - i);
        } else {
            bool found = false;
            for (const char* s : symbols) {
                std::string_view sv(s);
                if (src.substr(i, sv.size()) == sv) {
                    out.push_back({Token::Kind::symbol, std::string(sv), line, col});
                    adv(sv.size());
                    found = true;
                    break;
                }
            }
            if (!found) throw ParseError(line, col, "a token, found '" + std::string(1, c) + "'");
        }
    }
    out.push_back({Token::Kind::end, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    Program program() {
        Program p{{}, Skip()};
        if (is_kw("program")) {
            next();
            expect("{");
            while (is_kw("method")) {
                next();
                Method m{MethodName(name("method name")), {}, Skip()};
                expect("(");
                m.formal = Variable(name("formal parameter"));
                expect(")");
                expect("{");
                m.body = seq();
                expect("}");
                p.methods.push_back(std::move(m));
            }
            expect_kw("main");
            expect("{");
            p.main = seq();
            expect("}");
            expect("}");
        } else {
            p.main = seq();
        }
        finish();
        return p;
    }

    Stmt statement() { auto s = seq(); finish(); return s; }
    AExp arith() { auto a = aexp(); finish(); return a; }
    BExp boolean() { auto b = bor(); finish(); return b; }

    Exp expression() {
        std::size_t save = pos_;
        try {
            auto a = aexp();
            finish();
            return A(a);
        } catch (const ParseError&) {
            pos_ = save;
        }
        return B(boolean());
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool is_sym(std::string_view s) const { return peek().kind == Token::Kind::symbol && peek().text == s; }
    bool is_kw(std::string_view s) const { return peek().kind == Token::Kind::ident && peek().text == s; }

    [[noreturn]] void fail(const std::string& expected) const {
        const auto& t = peek();
        std::string found = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.line, t.col, expected + ", found " + found);
    }
    void expect(std::string_view s) {
        if (!is_sym(s)) fail("'" + std::string(s) + "'");
        next();
    }
    void expect_kw(std::string_view s) {
        if (!is_kw(s)) fail("'" + std::string(s) + "'");
        next();
    }
    void finish() {
        if (peek().kind != Token::Kind::end) fail("end of input");
    }
    std::string name(const std::string& what) {
        if (peek().kind != Token::Kind::ident || keywords.count(peek().text)) fail(what);
        return next().text;
    }

    Stmt seq() {
        Stmt s = atom();
        while (is_sym(";;")) {
            next();
            s = Seq(std::move(s), atom());
        }
        return s;
    }

    Stmt atom() {
        if (is_sym("(")) {
            next();
            Stmt s = seq();
            expect(")");
            return s;
        }
        if (peek().kind != Token::Kind::ident) fail("a statement");
        const std::string kw = peek().text;
        if (kw == "skip") { next(); return Skip(); }
        if (kw == "if" || kw == "while" || kw == "guard") {
            next();
            BExp b = bor();
            expect_kw(kw == "while" ? "do" : "then");
            Stmt body = seq();
            if (kw == "if") { expect_kw("fi"); return If(b, body); }
            if (kw == "while") { expect_kw("od"); return While(b, body); }
            expect_kw("end");
            return Guard(b, body);
        }
        if (kw == "co") {
            next();
            Stmt l = seq();
            expect("||");
            Stmt r = seq();
            expect_kw("oc");
            return LocPar(l, r);
        }
        if (kw == "scope") {
            next();
            expect("(");
            VarDecl d;
            if (!is_sym(")")) {
                d.push_back(name("a variable"));
                while (is_sym(";")) {
                    next();
                    d.push_back(name("a variable"));
                }
            }
            expect(")");
            expect("{");
            Stmt body = seq();
            expect("}");
            return LocMem(std::move(d), body);
        }
        if (kw == "input") { next(); return Input(name("a variable")); }
        if (kw == "call") {
            next();
            MethodName m(name("a method name"));
            expect("(");
            AExp a = aexp();
            expect(")");
            return Call(std::move(m), a);
        }
        Variable x(name("a statement"));
        expect(":=");
        return Assign(std::move(x), aexp());
    }

    AExp aexp() {
        AExp a = term();
        while (is_sym("+") || is_sym("-")) {
            ArithOp op = next().text == "+" ? ArithOp::add : ArithOp::sub;
            a = AExp::bin(std::move(a), op, term());
        }
        return a;
    }

    AExp term() {
        AExp a = factor();
        while (is_sym("*")) {
            next();
            a = Mul(std::move(a), factor());
        }
        return a;
    }

    AExp factor() {
        if (is_sym("(")) {
            next();
            AExp a = aexp();
            expect(")");
            return a;
        }
        if (is_sym("-") && toks_[pos_ + 1].kind == Token::Kind::number) {
            next();
            return Num(-Integer(next().text));
        }
        if (peek().kind == Token::Kind::number) return Num(Integer(next().text));
        return Var(name("an arithmetic expression"));
    }

    BExp bor() {
        BExp b = band();
        while (is_sym("||")) {
            next();
            b = Or(std::move(b), band());
        }
        return b;
    }

    BExp band() {
        BExp b = bnot();
        while (is_sym("&&")) {
            next();
            b = And(std::move(b), bnot());
        }
        return b;
    }

    BExp bnot() {
        if (is_sym("!")) {
            next();
            return Not(bnot());
        }
        return bprimary();
    }

    BExp bprimary() {
        if (is_kw("true")) { next(); return Bool(true); }
        if (is_kw("false")) { next(); return Bool(false); }
        if (is_sym("(")) {
            // Either a parenthesized Boolean or the left operand of a relation.
            std::size_t save = pos_;
            try {
                next();
                BExp b = bor();
                expect(")");
                return b;
            } catch (const ParseError&) {
                pos_ = save;
            }
        }
        AExp l = aexp();
        RelOp op;
        if (is_sym("<=")) op = RelOp::leq;
        else if (is_sym(">=")) op = RelOp::geq;
        else if (is_sym("==")) op = RelOp::eq;
        else fail("a relational operator");
        next();
        return BExp::rel(std::move(l), op, aexp());
    }
};

}  // namespace detail

inline Program parse_program(std::string_view src, Mode mode) {
    Program p = detail::Parser(src).program();
    if (mode == Mode::wl) {
        if (!p.methods.empty()) throw ModeError("methods are not part of WL");
        if (!language_check(p.main, Mode::wl)) throw ModeError("extended statement in WL mode");
    }
    return p;
}

inline Stmt parse_stmt(std::string_view src) { return detail::Parser(src).statement(); }
inline AExp parse_aexp(std::string_view src) { return detail::Parser(src).arith(); }
inline BExp parse_bexp(std::string_view src) { return detail::Parser(src).boolean(); }
inline Exp parse_exp(std::string_view src) { return detail::Parser(src).expression(); }

}  // namespace lagc
