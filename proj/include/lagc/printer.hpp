#pragma once

#include <string>

#include "lagc/trace.hpp"

namespace lagc {

inline std::string to_string(ArithOp op) {
    switch (op) {
        case ArithOp::add: return "+";
        case ArithOp::sub: return "-";
        case ArithOp::mul: return "*";
    }
    return "?";
}
inline std::string to_string(BoolOp op) { return op == BoolOp::conj ? "&&" : "||"; }
inline std::string to_string(RelOp op) {
    switch (op) {
        case RelOp::leq: return "<=";
        case RelOp::geq: return ">=";
        case RelOp::eq: return "==";
    }
    return "?";
}
inline std::string to_string(EventMarker ev) {
    switch (ev) {
        case EventMarker::inpEv: return "inpEv";
        case EventMarker::invEv: return "invEv";
        case EventMarker::invREv: return "invREv";
    }
    return "?";
}

inline std::string pretty(const AExp& a) {
    switch (a.kind()) {
        case AExp::Kind::num: return a.value().str();
        case AExp::Kind::var: return a.var().name;
        case AExp::Kind::bin: {
            auto side = [](const AExp& x) { return x.kind() == AExp::Kind::bin ? "(" + pretty(x) + ")" : pretty(x); };
            return side(a.left()) + " " + to_string(a.op()) + " " + side(a.right());
        }
    }
    return {};
}

inline std::string pretty(const BExp& b) {
    switch (b.kind()) {
        case BExp::Kind::lit: return b.value() ? "true" : "false";
        case BExp::Kind::not_: {
            auto x = b.operand();
            return x.kind() == BExp::Kind::bin ? "!(" + pretty(x) + ")" : "!" + pretty(x);
        }
        case BExp::Kind::bin: {
            auto side = [](const BExp& x) { return x.kind() == BExp::Kind::bin ? "(" + pretty(x) + ")" : pretty(x); };
            return side(b.left()) + " " + to_string(b.bool_op()) + " " + side(b.right());
        }
        case BExp::Kind::rel: return pretty(b.aleft()) + " " + to_string(b.rel_op()) + " " + pretty(b.aright());
    }
    return {};
}

inline std::string pretty(const Exp& e) {
    if (e.is_a()) return pretty(e.a());
    if (e.is_b()) return pretty(e.b());
    return e.p().name;
}

inline std::string pretty(const SExp& e) { return e.is_star() ? "*" : pretty(e.exp()); }

inline std::string pretty(const Stmt& s) {
    using K = Stmt::Kind;
    switch (s.kind()) {
        case K::skip: return "skip";
        case K::assign: return s.var().name + " := " + pretty(s.aexp());
        case K::if_: return "if " + pretty(s.cond()) + " then " + pretty(s.body()) + " fi";
        case K::while_: return "while " + pretty(s.cond()) + " do " + pretty(s.body()) + " od";
        case K::seq: {
            // ";;" groups to the left, so only a right-nested Seq needs parentheses.
            auto r = s.second();
            return pretty(s.first()) + " ;; " + (r.kind() == K::seq ? "(" + pretty(r) + ")" : pretty(r));
        }
        case K::par: return "co " + pretty(s.first()) + " || " + pretty(s.second()) + " oc";
        case K::scope: {
            std::string d;
            for (const auto& v : s.decl()) d += (d.empty() ? "" : "; ") + v.name;
            return "scope(" + d + ") { " + pretty(s.body()) + " }";
        }
        case K::input: return "input " + s.var().name;
        case K::guard: return "guard " + pretty(s.cond()) + " then " + pretty(s.body()) + " end";
        case K::call: return "call " + s.method().name + "(" + pretty(s.aexp()) + ")";
    }
    return {};
}

inline std::string pretty(const Method& m) {
    return "method " + m.name.name + "(" + m.formal.name + ") { " + pretty(m.body) + " }";
}

inline std::string pretty(const Program& p) {
    std::string r = "program { ";
    for (const auto& m : p.methods) r += pretty(m) + " ";
    return r + "main { " + pretty(p.main) + " } }";
}

inline std::string pretty(const State& s) {
    std::string r = "{";
    bool first = true;
    for (const auto& [k, v] : s) {
        r += (first ? "" : ", ") + k.name + "=" + pretty(v);
        first = false;
    }
    return r + "}";
}

inline std::string pretty(const TraceAtom& a) {
    if (a.is_state()) return pretty(a.state());
    std::string r = "Event(" + to_string(a.event().ev) + ", [";
    bool first = true;
    for (const auto& e : a.event().args) {
        r += (first ? "" : ", ") + pretty(e);
        first = false;
    }
    return r + "])";
}

inline std::string pretty(const Trace& t) {
    std::string r;
    for (const auto& a : t.atoms()) r += (r.empty() ? "" : " ~> ") + pretty(a);
    return r;
}

}  // namespace lagc
