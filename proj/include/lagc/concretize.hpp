#pragma once

#include "lagc/trace.hpp"

namespace lagc {

inline bool is_conc_map_state(const State& rho, const State& s) {
    if (!is_concrete_state(rho)) return false;
    VarSet common;
    for (const auto& [k, v] : s)
        if (rho.contains(k)) common.insert(common.end(), k);
    return common == symbolic_vars(s);
}

// rho wins on shared keys.
inline State apply_conc_state(const State& rho, const State& s) {
    State::Map m;
    for (const auto& [k, v] : s) m.emplace_hint(m.end(), k, eval_sexp(v, rho));
    for (const auto& [k, v] : rho) m.insert_or_assign(k, v);
    return State(std::move(m));
}

inline State min_conc_map_state(const State& s, const Integer& n) {
    State::Map m;
    for (const auto& [k, v] : s)
        if (v.is_star()) m.emplace_hint(m.end(), k, E(Num(n)));
    return State(std::move(m));
}

inline bool is_conc_map_trace(const State& rho, const Trace& t) {
    if (!is_concrete_state(rho)) return false;
    bool ok = true;
    t.for_each_back([&](const TraceAtom& a) {
        if (ok && a.is_state()) ok = is_conc_map_state(rho, a.state());
    });
    return ok;
}

inline TraceAtom concretize_atom(const State& rho, const TraceAtom& a) {
    if (a.is_state()) return StateAtom(apply_conc_state(rho, a.state()));
    return EventAtom(a.event().ev, eval_exp_list(a.event().args, rho));
}

inline Trace concretize_trace(const State& rho, const Trace& t) {
    Trace r;
    for (const auto& a : t.atoms()) r = r.push_back(concretize_atom(rho, a));
    return r;
}

inline ConditionedTrace concretize_cond_trace(const State& rho, const ConditionedTrace& p) {
    return {eval_bexp_set(p.pc, rho), concretize_trace(rho, p.trace)};
}

// Every state contributes the same numeral, so the merge order only
// matters for its key set.
inline State min_conc_map_trace(const Trace& t, const Integer& n) {
    State::Map m;
    t.for_each_back([&](const TraceAtom& a) {
        if (!a.is_state()) return;
        for (const auto& [k, v] : a.state())
            if (v.is_star()) m.insert_or_assign(k, E(Num(n)));
    });
    return State(std::move(m));
}

}  // namespace lagc
