#pragma once

#include <optional>
#include <set>

#include "lagc/trace.hpp"

namespace lagc {

// Pending(s) holds a statement; Done is empty.
struct ContinuationMarker {
    std::optional<Stmt> stmt;

    bool done() const { return !stmt.has_value(); }

    friend bool operator==(const ContinuationMarker&, const ContinuationMarker&) = default;
    friend std::strong_ordering operator<=>(const ContinuationMarker& a, const ContinuationMarker& b) {
        if (a.done() || b.done()) return b.done() <=> a.done();
        return *a.stmt <=> *b.stmt;
    }
};

inline ContinuationMarker Pending(Stmt s) { return {std::move(s)}; }
inline const ContinuationMarker Done{};

struct ContinuationTrace {
    ConditionedTrace cond;
    ContinuationMarker marker;
    friend bool operator==(const ContinuationTrace&, const ContinuationTrace&) = default;
    friend std::strong_ordering operator<=>(const ContinuationTrace& a, const ContinuationTrace& b) {
        if (auto c = a.cond <=> b.cond; c != 0) return c;
        return a.marker <=> b.marker;
    }
};

using ContSet = std::set<ContinuationTrace>;

inline ContinuationMarker cont_append(const ContinuationMarker& cm, const Stmt& s) {
    return cm.done() ? Pending(s) : Pending(Seq(*cm.stmt, s));
}

inline ContinuationMarker parallel(const ContinuationMarker& a, const ContinuationMarker& b) {
    if (a.done()) return b;
    if (b.done()) return a;
    return Pending(LocPar(*a.stmt, *b.stmt));
}

inline constexpr std::size_t default_fresh_bound = 100;

inline Variable fresh_variable(const State& s, const std::string& base, std::size_t bound) {
    Variable v = vargen(s, 0, bound, Variable(base));
    if (is_bound_exceeded(v)) throw FreshBoundExceeded("no fresh name for '" + base + "' within bound " + std::to_string(bound));
    return v;
}

inline ContSet valuate(const Stmt& s, const State& sigma, Mode mode, std::size_t fresh_bound = default_fresh_bound) {
    using K = Stmt::Kind;
    const auto one = [](PathCondition pc, Trace t, ContinuationMarker cm) {
        return ContSet{ContinuationTrace{{std::move(pc), std::move(t)}, std::move(cm)}};
    };
    if (mode == Mode::wl && !language_check(s, Mode::wl)) throw ModeError("extended statement in WL mode");

    switch (s.kind()) {
        case K::skip: return one({}, singleton(sigma), Done);
        case K::assign:
            return one({}, singleton(sigma).push_back(StateAtom(sigma.update(s.var(), E(eval_arith(s.aexp(), sigma))))), Done);
        case K::if_:
        case K::while_: {
            auto body = s.kind() == K::if_ ? s.body() : Seq(s.body(), s);
            ContSet r;
            r.insert({{{eval_bool(s.cond(), sigma)}, singleton(sigma)}, Pending(body)});
            r.insert({{{eval_bool(Not(s.cond()), sigma)}, singleton(sigma)}, Done});
            return r;
        }
        case K::seq: {
            ContSet r;
            for (auto& c : valuate(s.first(), sigma, mode, fresh_bound))
                r.insert({c.cond, cont_append(c.marker, s.second())});
            return r;
        }
        case K::par: {
            ContSet r;
            for (auto& c : valuate(s.first(), sigma, mode, fresh_bound))
                r.insert({c.cond, parallel(c.marker, Pending(s.second()))});
            for (auto& c : valuate(s.second(), sigma, mode, fresh_bound))
                r.insert({c.cond, parallel(Pending(s.first()), c.marker)});
            return r;
        }
        case K::scope: {
            const auto& d = s.decl();
            if (d.empty()) return valuate(s.body(), sigma, mode, fresh_bound);
            const Variable& x = d.front();
            Variable x1 = fresh_variable(sigma, "$" + x.name + "::Scope", fresh_bound);
            Stmt rest = LocMem(VarDecl(d.begin() + 1, d.end()), s.body());
            return one({}, singleton(sigma).push_back(StateAtom(sigma.update(x1, E(Num(0))))),
                       Pending(substitute(rest, x, x1)));
        }
        case K::input: {
            Variable x1 = fresh_variable(sigma, "$" + s.var().name + "::Input", fresh_bound);
            State s1 = sigma.update(x1, Star).update(s.var(), E(Var(x1)));
            return one({}, concat(singleton(sigma), gen_event(EventMarker::inpEv, s1, {A(Var(x1))})), Done);
        }
        case K::guard: return one({eval_bool(s.cond(), sigma)}, singleton(sigma), Pending(s.body()));
        case K::call:
            return one({}, gen_event(EventMarker::invEv, sigma, {P(s.method()), A(s.aexp())}), Done);
    }
    return {};
}

}  // namespace lagc
