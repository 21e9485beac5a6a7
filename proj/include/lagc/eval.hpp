#pragma once

#include <set>

#include "lagc/state.hpp"

namespace lagc {

inline Integer apply_arith(ArithOp op, const Integer& l, const Integer& r) {
    switch (op) {
        case ArithOp::add: return l + r;
        case ArithOp::sub: return l - r;
        case ArithOp::mul: return l * r;
    }
    return 0;
}

inline bool apply_bool(BoolOp op, bool l, bool r) {
    return op == BoolOp::conj ? (l && r) : (l || r);
}

inline bool apply_rel(RelOp op, const Integer& l, const Integer& r) {
    switch (op) {
        case RelOp::leq: return l <= r;
        case RelOp::geq: return l >= r;
        case RelOp::eq: return l == r;
    }
    return false;
}

// Partial simplification. A symbolic variable stays put; a mapped one is
// replaced by its image as-is, without evaluating the image again.
inline AExp eval_arith(const AExp& a, const State& s) {
    switch (a.kind()) {
        case AExp::Kind::num: return a;
        case AExp::Kind::var: {
            const auto& e = s.lookup(a.var());
            return e.is_star() ? a : e.exp();
        }
        case AExp::Kind::bin: {
            auto l = eval_arith(a.left(), s);
            auto r = eval_arith(a.right(), s);
            if (l.is_num() && r.is_num()) return Num(apply_arith(a.op(), l.value(), r.value()));
            return AExp::bin(std::move(l), a.op(), std::move(r));
        }
    }
    return a;
}

inline BExp eval_bool(const BExp& b, const State& s) {
    switch (b.kind()) {
        case BExp::Kind::lit: return b;
        case BExp::Kind::not_: {
            auto x = eval_bool(b.operand(), s);
            return x.is_lit() ? Bool(!x.value()) : Not(std::move(x));
        }
        case BExp::Kind::bin: {
            auto l = eval_bool(b.left(), s);
            auto r = eval_bool(b.right(), s);
            if (l.is_lit() && r.is_lit()) return Bool(apply_bool(b.bool_op(), l.value(), r.value()));
            return BExp::bin(std::move(l), b.bool_op(), std::move(r));
        }
        case BExp::Kind::rel: {
            auto l = eval_arith(b.aleft(), s);
            auto r = eval_arith(b.aright(), s);
            if (l.is_num() && r.is_num()) return Bool(apply_rel(b.rel_op(), l.value(), r.value()));
            return BExp::rel(std::move(l), b.rel_op(), std::move(r));
        }
    }
    return b;
}

inline Exp eval_exp(const Exp& e, const State& s) {
    if (e.is_a()) return A(eval_arith(e.a(), s));
    if (e.is_b()) return B(eval_bool(e.b(), s));
    return e;
}

inline SExp eval_sexp(const SExp& e, const State& s) {
    return e.is_star() ? e : E(eval_arith(e.exp(), s));
}

inline ExpList eval_exp_list(const ExpList& l, const State& s) {
    ExpList r;
    r.reserve(l.size());
    for (const auto& e : l) r.push_back(eval_exp(e, s));
    return r;
}

inline std::set<BExp> eval_bexp_set(const std::set<BExp>& pc, const State& s) {
    std::set<BExp> r;
    for (const auto& b : pc) r.insert(eval_bool(b, s));
    return r;
}

inline bool is_concrete(const AExp& a) { return a.is_num(); }
inline bool is_concrete(const BExp& b) { return b.is_lit(); }
inline bool is_concrete(const Exp& e) {
    if (e.is_a()) return is_concrete(e.a());
    if (e.is_b()) return is_concrete(e.b());
    return true;
}
inline bool is_concrete(const SExp& e) { return !e.is_star() && is_concrete(e.exp()); }
inline bool is_concrete(const ExpList& l) {
    for (const auto& e : l)
        if (!is_concrete(e)) return false;
    return true;
}
inline bool is_concrete(const std::set<BExp>& pc) {
    for (const auto& b : pc)
        if (!b.is_lit()) return false;
    return true;
}

inline State simplify_state(const State& s) {
    State::Map m;
    for (const auto& [k, v] : s) m.emplace_hint(m.end(), k, eval_sexp(v, s));
    return State(std::move(m));
}

}  // namespace lagc
