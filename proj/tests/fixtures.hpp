#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "lagc/lagc.hpp"

namespace lagc {
// Readable gtest diagnostics.
inline void PrintTo(const Trace& t, std::ostream* os) { *os << pretty(t); }
inline void PrintTo(const State& s, std::ostream* os) { *os << pretty(s); }
inline void PrintTo(const Stmt& s, std::ostream* os) { *os << pretty(s); }
}  // namespace lagc

namespace lagc::fixtures {

// Worked examples from the formal development.
inline AExp aexp_ex() { return Sub(Mul(Var("x"), Var("y")), Var("x")); }
inline BExp bexp_ex() { return Or(Eq(Var("x"), Num(2)), Bool(false)); }

inline State sigma1() { return State{{"x", E(Mul(Var("y"), Num(4)))}, {"y", Star}}; }
inline State sigma2() { return State{{"x", E(Num(8))}, {"y", E(Num(2))}}; }

inline Trace tau1() { return Trace{StateAtom(sigma1()), EventAtom(EventMarker::inpEv, {}), StateAtom(sigma1())}; }
inline Trace tau2() {
    return Trace{StateAtom(sigma1()), EventAtom(EventMarker::invREv, {P("foo"), A(Num(2))}), StateAtom(sigma2())};
}
inline Trace tau3() { return Trace{StateAtom(sigma2()), StateAtom(State{})}; }

inline ConditionedTrace pi1() { return {{}, tau1()}; }
inline ConditionedTrace pi2() { return {{Bool(true)}, tau2()}; }
inline ConditionedTrace pi3() { return {{Bool(false)}, tau3()}; }

inline Stmt wl_ex1() {
    return If(Not(Eq(Var("x"), Var("y"))),
              Seq(Seq(Assign("z", Var("y")), Assign("y", Var("x"))), Assign("x", Var("z"))));
}

inline Stmt wl_ex2() {
    return Seq(Seq(Assign("x", Num(6)), Assign("y", Num(1))),
               While(Geq(Var("x"), Num(2)),
                     Seq(Assign("y", Mul(Var("y"), Var("x"))), Assign("x", Sub(Var("x"), Num(1))))));
}

inline Program ext_ex1() {
    return Program{{}, LocMem({"x"}, LocPar(Assign("x", Num(1)), Assign("x", Num(2))))};
}

inline Program ext_ex2() {
    return Program{{Method{"foo", "x", Assign("x", Num(2))}},
                   Seq(Seq(Assign("x", Num(0)), Call("foo", Var("x"))), Assign("x", Num(1)))};
}

inline Program ext_ex3() { return Program{{}, Seq(Input("x"), Assign("x", Add(Var("x"), Num(1))))}; }

// State shorthand: concrete integer bindings.
inline State st(std::initializer_list<std::pair<const char*, int>> kv) {
    State s;
    for (auto [k, v] : kv) s = s.update(k, E(Num(v)));
    return s;
}

inline Trace states(std::initializer_list<State> ss) {
    Trace t;
    for (const auto& s : ss) t = t.push_back(StateAtom(s));
    return t;
}

// Expected global traces, transcribed state for state.
inline TraceSet golden_wl_ex1() { return {singleton(st({{"x", 0}, {"y", 0}, {"z", 0}}))}; }

inline TraceSet golden_wl_ex2() {
    return {states({st({{"x", 0}, {"y", 0}}), st({{"x", 6}, {"y", 0}}), st({{"x", 6}, {"y", 1}}),
                    st({{"x", 6}, {"y", 6}}), st({{"x", 5}, {"y", 6}}), st({{"x", 5}, {"y", 30}}),
                    st({{"x", 4}, {"y", 30}}), st({{"x", 4}, {"y", 120}}), st({{"x", 3}, {"y", 120}}),
                    st({{"x", 3}, {"y", 360}}), st({{"x", 2}, {"y", 360}}), st({{"x", 2}, {"y", 720}}),
                    st({{"x", 1}, {"y", 720}})})};
}

inline TraceSet golden_ext_ex1() {
    auto s = [](int v) { return st({{"$x::Scope", v}}); };
    return {states({State{}, s(0), s(1), s(2)}), states({State{}, s(0), s(2), s(1)})};
}

inline TraceSet golden_ext_ex2() {
    auto x = [](int v) { return StateAtom(st({{"x", v}})); };
    auto xp = [](int v, int p) { return StateAtom(st({{"x", v}, {"$foo::Param", p}})); };
    TraceAtom inv = EventAtom(EventMarker::invEv, {P("foo"), A(Num(0))});
    TraceAtom react = EventAtom(EventMarker::invREv, {P("foo"), A(Num(0))});
    return {
        Trace{x(0), x(0), inv, x(0), react, x(0), xp(0, 0), xp(1, 0), xp(1, 2)},
        Trace{x(0), x(0), inv, x(0), react, x(0), xp(0, 0), xp(0, 2), xp(1, 2)},
        Trace{x(0), x(0), inv, x(0), x(1), react, x(1), xp(1, 0), xp(1, 2)},
    };
}

inline TraceSet golden_ext_ex3() {
    auto s = [](int v) { return StateAtom(st({{"x", v}, {"$x::Input", 0}})); };
    return {Trace{s(0), s(0), EventAtom(EventMarker::inpEv, {A(Num(0))}), s(0), s(1)}};
}

// ---------------------------------------------------------------- generators

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    std::vector<Variable> vars{"x", "y", "z"};

    Variable var() { return vars[static_cast<std::size_t>(pick(0, static_cast<int>(vars.size()) - 1))]; }

    AExp aexp(int depth, bool with_vars = true) {
        int k = depth <= 0 ? pick(0, with_vars ? 1 : 0) : pick(0, 3);
        if (k == 0 || (k == 1 && !with_vars)) return Num(pick(-5, 5));
        if (k == 1) return Var(var());
        ArithOp op = static_cast<ArithOp>(pick(0, 2));
        return AExp::bin(aexp(depth - 1, with_vars), op, aexp(depth - 1, with_vars));
    }

    BExp bexp(int depth, bool with_vars = true) {
        int k = depth <= 0 ? pick(0, 1) : pick(0, 4);
        if (k == 0) return Bool(coin());
        if (k == 1) return BExp::rel(aexp(1, with_vars), static_cast<RelOp>(pick(0, 2)), aexp(1, with_vars));
        if (k == 2) return Not(bexp(depth - 1, with_vars));
        return BExp::bin(bexp(depth - 1, with_vars), static_cast<BoolOp>(pick(0, 1)), bexp(depth - 1, with_vars));
    }

    Exp exp(int depth, bool with_vars = true) {
        int k = pick(0, 2);
        if (k == 0) return A(aexp(depth, with_vars));
        if (k == 1) return B(bexp(depth, with_vars));
        return P(coin() ? "foo" : "bar");
    }

    State concrete_state() {
        State s;
        for (const auto& v : vars)
            if (coin(0.8)) s = s.update(v, E(Num(pick(-9, 9))));
        return s;
    }

    State full_concrete_state() {
        State s;
        for (const auto& v : vars) s = s.update(v, E(Num(pick(-9, 9))));
        return s;
    }

    // Arbitrary, possibly ill-formed symbolic state.
    State symbolic_state() {
        State s;
        for (const auto& v : vars) {
            int k = pick(0, 3);
            if (k == 0) continue;
            s = s.update(v, k == 1 ? Star : E(aexp(1)));
        }
        return s;
    }

    Trace trace(int len) {
        Trace t;
        for (int i = 0; i < len; ++i) {
            if (coin(0.7))
                t = t.push_back(StateAtom(symbolic_state()));
            else
                t = t.push_back(EventAtom(static_cast<EventMarker>(pick(0, 2)), {exp(1)}));
        }
        return t;
    }

    // WL statement of roughly `budget` nodes; every loop counts a
    // dedicated variable down so it terminates.
    Stmt wl_stmt(int& budget) {
        --budget;
        int k = budget <= 0 ? pick(0, 1) : pick(0, 4);
        switch (k) {
            case 0: return Skip();
            case 1: return Assign(var(), aexp(1));
            case 2: return If(bexp(1), wl_stmt(budget));
            case 3: {
                Stmt a = wl_stmt(budget);
                return Seq(a, wl_stmt(budget));
            }
            default: {
                // while i >= 1 do body ;; i := i - 1 od
                Variable i = "i" + std::to_string(loops_++);
                // Nested counts multiply; keep the product within 20.
                int n = pick(0, 20 / iter_);
                int saved = iter_;
                iter_ *= std::max(n, 1);
                Stmt body = wl_stmt(budget);
                iter_ = saved;
                return Seq(Assign(i, Num(n)),
                           While(Geq(Var(i), Num(1)), Seq(body, Assign(i, Sub(Var(i), Num(1))))));
            }
        }
    }

    Stmt ext_stmt(int& budget) {
        --budget;
        int k = budget <= 0 ? pick(0, 1) : pick(0, 8);
        switch (k) {
            case 0: return Skip();
            case 1: return Assign(var(), aexp(1));
            case 2: return If(bexp(1), ext_stmt(budget));
            case 3: {
                Stmt a = ext_stmt(budget);
                return Seq(a, ext_stmt(budget));
            }
            case 4: {
                Stmt a = ext_stmt(budget);
                return LocPar(a, ext_stmt(budget));
            }
            case 5: return LocMem({var()}, ext_stmt(budget));
            case 6: return Input(var());
            case 7: return Guard(bexp(1), ext_stmt(budget));
            default: return Call("foo", aexp(1));
        }
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
    int loops_ = 0;
    int iter_ = 1;
};

}  // namespace lagc::fixtures
