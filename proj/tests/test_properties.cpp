#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace lagc;
using namespace lagc::fixtures;

namespace {
constexpr int kInstances = 1000;

// Independent evaluator for variable-free arithmetic.
Integer direct(const AExp& a) {
    if (a.is_num()) return a.value();
    Integer l = direct(a.left()), r = direct(a.right());
    switch (a.op()) {
        case ArithOp::add: return l + r;
        case ArithOp::sub: return l - r;
        case ArithOp::mul: return l * r;
    }
    return 0;
}

Exp concrete_exp(Gen& g) {
    switch (g.pick(0, 2)) {
        case 0: return A(Num(g.pick(-50, 50)));
        case 1: return B(Bool(g.coin()));
        default: return P("foo");
    }
}

std::set<WlConfig> map_markers(const std::set<WlConfig>& cs, auto f) {
    std::set<WlConfig> r;
    for (const auto& c : cs) r.insert({c.trace, f(c.marker)});
    return r;
}

void expect_concrete_bounded(const TraceSet& ts) {
    for (const auto& t : ts) {
        ASSERT_TRUE(is_concrete_trace(t)) << pretty(t);
        ASSERT_TRUE(t.atoms().front().is_state());
        ASSERT_TRUE(t.back().is_state());
    }
}
}  // namespace

TEST(Properties, ConcretenessPreservation) {
    Gen g(101);
    for (int i = 0; i < kInstances; ++i) {
        State s = g.symbolic_state();
        AExp a = Num(g.pick(-100, 100));
        BExp b = Bool(g.coin());
        Exp e = concrete_exp(g);
        SExp se = E(Num(g.pick(-9, 9)));
        ExpList l{concrete_exp(g), concrete_exp(g)};
        std::set<BExp> pc{Bool(g.coin()), Bool(g.coin())};
        ASSERT_EQ(eval_arith(a, s), a);
        ASSERT_EQ(eval_bool(b, s), b);
        ASSERT_EQ(eval_exp(e, s), e);
        ASSERT_EQ(eval_sexp(se, s), se);
        ASSERT_EQ(eval_exp_list(l, s), l);
        ASSERT_EQ(eval_bexp_set(pc, s), pc);
    }
}

TEST(Properties, VariableFreeEvaluatesConcretely) {
    Gen g(102);
    for (int i = 0; i < kInstances; ++i) {
        State s = g.symbolic_state();
        AExp a = g.aexp(3, false);
        BExp b = g.bexp(3, false);
        Exp e = g.exp(3, false);
        AExp va = eval_arith(a, s);
        ASSERT_TRUE(is_concrete(va));
        ASSERT_EQ(va.value(), direct(a)) << pretty(a);
        ASSERT_TRUE(is_concrete(eval_bool(b, s))) << pretty(b);
        ASSERT_TRUE(is_concrete(eval_exp(e, s)));
        ASSERT_TRUE(is_concrete(eval_sexp(E(a), s)));
    }
}

TEST(Properties, ConcreteStateTotality) {
    Gen g(103);
    for (int i = 0; i < kInstances; ++i) {
        State s = g.full_concrete_state();
        AExp a = g.aexp(3);
        BExp b = g.bexp(3);
        Exp e = g.exp(3);
        ASSERT_TRUE(is_concrete(eval_arith(a, s))) << pretty(a);
        ASSERT_TRUE(is_concrete(eval_bool(b, s))) << pretty(b);
        ASSERT_TRUE(is_concrete(eval_exp(e, s)));
        ASSERT_TRUE(is_concrete_state(simplify_state(s)));
    }
}

TEST(Properties, SymbolicVarsUnion) {
    Gen g(104);
    for (int i = 0; i < kInstances; ++i) {
        Trace t1 = g.trace(g.pick(0, 5)), t2 = g.trace(g.pick(0, 5));
        VarSet expected = trace_symbolic_vars(t1);
        VarSet right = trace_symbolic_vars(t2);
        expected.insert(right.begin(), right.end());
        ASSERT_EQ(trace_symbolic_vars(concat(t1, t2)), expected);
    }
}

TEST(Properties, MinimalMapDomain) {
    Gen g(105);
    for (int i = 0; i < kInstances; ++i) {
        Trace t = g.trace(g.pick(0, 6));
        int n = g.pick(-3, 3);
        State rho = min_conc_map_trace(t, n);
        ASSERT_EQ(domain(rho), trace_symbolic_vars(t));
        ASSERT_TRUE(is_concrete_state(rho));
        for (const auto& [k, v] : rho) ASSERT_EQ(v, E(Num(n)));
    }
}

TEST(Properties, SeqDistributesWl) {
    Gen g(106);
    for (int i = 0; i < kInstances; ++i) {
        int b1 = 4, b2 = 4;
        Stmt s1 = g.wl_stmt(b1), s2 = g.wl_stmt(b2);
        State sigma = initial_state(occurrences(Seq(s1, s2)));
        for (const auto& v : domain(sigma)) sigma = sigma.update(v, E(Num(g.pick(-3, 3))));
        Trace t = singleton(sigma);
        auto lhs = successors_wl({t, Pending(Seq(s1, s2))});
        auto rhs = map_markers(successors_wl({t, Pending(s1)}), [&](const auto& m) { return cont_append(m, s2); });
        ASSERT_EQ(lhs, rhs) << pretty(Seq(s1, s2));
    }
}

TEST(Properties, SeqDistributesExt) {
    Gen g(107);
    for (int i = 0; i < kInstances; ++i) {
        int b1 = 4, b2 = 4;
        Stmt s1 = g.ext_stmt(b1), s2 = g.ext_stmt(b2);
        Trace t = singleton(g.full_concrete_state());
        auto lhs = basic_successors({t, Pending(Seq(s1, s2))});
        auto rhs = map_markers(basic_successors({t, Pending(s1)}), [&](const auto& m) { return cont_append(m, s2); });
        ASSERT_EQ(lhs, rhs) << pretty(Seq(s1, s2));
    }
}

TEST(Properties, LocParSplits) {
    Gen g(108);
    for (int i = 0; i < kInstances; ++i) {
        int b1 = 4, b2 = 4;
        Stmt s1 = g.ext_stmt(b1), s2 = g.ext_stmt(b2);
        Trace t = states({g.full_concrete_state(), g.full_concrete_state()});
        auto lhs = basic_successors({t, Pending(LocPar(s1, s2))});
        auto rhs = map_markers(basic_successors({t, Pending(s1)}), [&](const auto& m) { return parallel(m, Pending(s2)); });
        rhs.merge(map_markers(basic_successors({t, Pending(s2)}), [&](const auto& m) { return parallel(Pending(s1), m); }));
        ASSERT_EQ(lhs, rhs) << pretty(LocPar(s1, s2));
    }
}

TEST(Properties, ComposedTracesConcreteWl) {
    Gen g(109);
    for (int i = 0; i < kInstances; ++i) {
        int budget = 6;
        Stmt s = g.wl_stmt(budget);
        State sigma = initial_state(occurrences(s));
        auto ts = traces_wl(s, sigma);
        ASSERT_EQ(ts.size(), 1u) << pretty(s);
        expect_concrete_bounded(ts);
        ASSERT_EQ(first_state(*ts.begin()), sigma);
        // Intermediate configurations too.
        for (const auto& c : compose_bounded_wl(g.pick(0, 6), {singleton(sigma), Pending(s)}))
            ASSERT_TRUE(is_concrete_trace(c.trace));
    }
}

TEST(Properties, ComposedTracesConcreteExt) {
    Gen g(110);
    MethodTable ms{Method{"foo", "x", Seq(Input("y"), Assign("x", Add(Var("x"), Var("y"))))}};
    for (int i = 0; i < kInstances; ++i) {
        int budget = 5;
        Program p{{ms.begin(), ms.end()}, g.ext_stmt(budget)};
        State sigma = g.coin() ? initial_state(occurrences(p)) : g.full_concrete_state();
        auto ts = traces_ext(p, sigma);
        ASSERT_FALSE(ts.empty());
        expect_concrete_bounded(ts);
        for (const auto& t : ts) ASSERT_TRUE(invocation_wellformed(t)) << pretty(t);
    }
}

TEST(Properties, NoReactionWithoutInvocation) {
    Gen g(111);
    MethodTable ms{Method{"foo", "x", Skip()}, Method{"bar", "y", Skip()}};
    for (int i = 0; i < kInstances; ++i) {
        Trace t = singleton(g.full_concrete_state());
        int n = g.pick(0, 4);
        for (int k = 0; k < n; ++k) {
            State s = g.full_concrete_state();
            if (g.coin()) t = concat(t.drop_last(), gen_event(EventMarker::inpEv, last_state(t), {A(Num(k))}));
            t = t.push_back(StateAtom(s));
        }
        ASSERT_TRUE(successors2(ms, {t, {{Done, 1}}}).empty());
    }
}

TEST(Properties, WlDeterminism) {
    Gen g(112);
    for (int i = 0; i < kInstances; ++i) {
        int budget = 5;
        Stmt s = g.wl_stmt(budget);
        State sigma = initial_state(occurrences(s));
        ASSERT_LE(successors_wl({singleton(sigma), Pending(s)}).size(), 1u);
    }
}
