#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace lagc;
using namespace lagc::fixtures;

TEST(State, DomainAndUpdate) {
    EXPECT_TRUE(domain(State{}).empty());
    EXPECT_EQ(domain(sigma1()), (VarSet{"x", "y"}));
    EXPECT_EQ(domain(update(State{}, "v", E(Num(1)))), (VarSet{"v"}));
    EXPECT_EQ(update(State{}, "x", E(Num(2))).lookup("x"), E(Num(2)));
    EXPECT_EQ(update(sigma2(), "x", E(Num(2))), st({{"x", 2}, {"y", 2}}));
    EXPECT_EQ(update(update(State{}, "x", E(Num(1))), "x", E(Num(3))), st({{"x", 3}}));
}

TEST(State, InsertionOrderIrrelevant) {
    State a = State{}.update("a", E(Num(1))).update("b", Star);
    State b = State{}.update("b", Star).update("a", E(Num(1)));
    EXPECT_EQ(a, b);
}

TEST(State, SymbolicVars) {
    EXPECT_EQ(symbolic_vars(sigma1()), (VarSet{"y"}));
    EXPECT_TRUE(symbolic_vars(sigma2()).empty());
    EXPECT_TRUE(symbolic_vars(State{}).empty());
}

TEST(State, Wellformedness) {
    EXPECT_TRUE(is_wellformed_state(sigma1()));
    EXPECT_TRUE(is_wellformed_state(sigma2()));
    EXPECT_TRUE(is_wellformed_state(State{{"x0", Star}}));
    EXPECT_FALSE(is_wellformed_state(State{{"x", E(Var("y"))}}));
}

TEST(State, Concreteness) {
    EXPECT_FALSE(is_concrete_state(sigma1()));
    EXPECT_TRUE(is_concrete_state(sigma2()));
    EXPECT_TRUE(is_concrete_state(State{}));
    EXPECT_FALSE(is_concrete_state(State{{"x", Star}}));
}

TEST(State, Vargen) {
    EXPECT_EQ(vargen(sigma1(), 0, 100, "$x::Scope"), Variable("$x::Scope"));
    EXPECT_EQ(vargen(sigma1(), 0, 0, "$x::Input"), Variable("$BOUND_EXCEEDED::$x::Input"));
    EXPECT_EQ(vargen(State{{"$x::Scope", E(Num(0))}}, 0, 100, "$x::Scope"), Variable("c$x::Scope"));
    State taken{{"v", Star}, {"cv", Star}};
    EXPECT_EQ(vargen(taken, 0, 100, "v"), Variable("ccv"));
    EXPECT_EQ(vargen(taken, 0, 2, "v"), Variable("$BOUND_EXCEEDED::v"));
}

TEST(State, InitialState) {
    EXPECT_EQ(initial_state(occurrences(wl_ex1())), st({{"x", 0}, {"y", 0}, {"z", 0}}));
    EXPECT_EQ(initial_state({}), State{});
    EXPECT_EQ(initial_state({"x", "x", "y"}), st({{"x", 0}, {"y", 0}}));
    EXPECT_EQ(initial_state(occurrences(ext_ex2())), st({{"x", 0}}));
}

TEST(State, Simplify) {
    EXPECT_EQ(simplify_state(sigma2()), sigma2());
    EXPECT_EQ(simplify_state(State{{"x", E(Add(Num(2), Num(3)))}}), st({{"x", 5}}));
    EXPECT_EQ(simplify_state(sigma1()), sigma1());
}

TEST(Eval, Operators) {
    EXPECT_EQ(apply_arith(ArithOp::mul, 6, 120), 720);
    EXPECT_EQ(apply_arith(ArithOp::sub, 5, 5), 0);
    EXPECT_EQ(apply_arith(ArithOp::add, -3, 3), 0);
    EXPECT_FALSE(apply_rel(RelOp::geq, 1, 2));
    EXPECT_FALSE(apply_bool(BoolOp::disj, false, false));
    EXPECT_TRUE(apply_rel(RelOp::eq, 0, 0));
}

TEST(Eval, BigIntegers) {
    Integer big("123456789012345678901234567890");
    EXPECT_EQ(eval_arith(Mul(Num(big), Num(big)), State{}), Num(big * big));
}

TEST(Eval, Arith) {
    EXPECT_EQ(eval_arith(aexp_ex(), sigma2()), Num(8));
    EXPECT_EQ(eval_arith(Num(9), State{}), Num(9));
    EXPECT_EQ(eval_arith(Var("x"), sigma1()), Mul(Var("y"), Num(4)));
    EXPECT_THROW(eval_arith(Var("q"), sigma1()), UnboundVariable);
}

TEST(Eval, MappedImageIsNotReevaluated) {
    State s{{"x", E(Add(Num(2), Num(3)))}};
    EXPECT_EQ(eval_arith(Var("x"), s), Add(Num(2), Num(3)));
}

TEST(Eval, Bool) {
    EXPECT_EQ(eval_bool(bexp_ex(), sigma1()), Or(Eq(Mul(Var("y"), Num(4)), Num(2)), Bool(false)));
    EXPECT_EQ(eval_bool(Bool(true), State{}), Bool(true));
    EXPECT_EQ(eval_bool(Not(Eq(Var("x"), Var("y"))), initial_state(occurrences(wl_ex1()))), Bool(false));
}

TEST(Eval, OtherKinds) {
    EXPECT_EQ(eval_exp(P("foo"), sigma1()), P("foo"));
    EXPECT_EQ(eval_sexp(Star, sigma2()), Star);
    EXPECT_EQ(eval_exp_list({P("foo"), A(Var("x"))}, sigma2()), (ExpList{P("foo"), A(Num(8))}));
    EXPECT_EQ(eval_bexp_set({Eq(Var("x"), Num(8)), Bool(true)}, sigma2()), (std::set<BExp>{Bool(true)}));
}

TEST(Eval, Concreteness) {
    EXPECT_TRUE(is_concrete(Num(0)));
    EXPECT_FALSE(is_concrete(Star));
    EXPECT_FALSE(is_concrete(aexp_ex()));
    EXPECT_TRUE(is_concrete(P("m")));
    EXPECT_TRUE(is_concrete(ExpList{}));
    EXPECT_FALSE(is_concrete(std::set<BExp>{Bool(true), Eq(Var("y"), Num(2))}));
}
