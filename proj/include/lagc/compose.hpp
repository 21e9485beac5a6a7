#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "lagc/concretize.hpp"
#include "lagc/localeval.hpp"

namespace lagc {

struct WlConfig {
    Trace trace;
    ContinuationMarker marker;
    friend bool operator==(const WlConfig&, const WlConfig&) = default;
    friend std::strong_ordering operator<=>(const WlConfig& a, const WlConfig& b) {
        if (auto c = a.trace <=> b.trace; c != 0) return c;
        return a.marker <=> b.marker;
    }
};

using MarkerBag = std::map<ContinuationMarker, std::size_t>;

struct ExtConfig {
    Trace trace;
    MarkerBag markers;
    friend bool operator==(const ExtConfig&, const ExtConfig&) = default;
    friend std::strong_ordering operator<=>(const ExtConfig& a, const ExtConfig& b) {
        if (auto c = a.trace <=> b.trace; c != 0) return c;
        return std::lexicographical_compare_three_way(
            a.markers.begin(), a.markers.end(), b.markers.begin(), b.markers.end(),
            [](const auto& x, const auto& y) {
                if (auto c = x.first <=> y.first; c != 0) return c;
                return x.second <=> y.second;
            });
    }
};

using MethodTable = std::set<Method>;
using TraceSet = std::set<Trace>;

inline MethodTable make_method_table(const std::vector<Method>& ms) { return MethodTable(ms.begin(), ms.end()); }

inline MarkerBag bag_add(MarkerBag q, const ContinuationMarker& cm) {
    ++q[cm];
    return q;
}

inline MarkerBag bag_remove(MarkerBag q, const ContinuationMarker& cm) {
    auto it = q.find(cm);
    if (it != q.end() && --it->second == 0) q.erase(it);
    return q;
}

struct ComposePolicy {
    std::size_t initial_bound = 0;
    std::size_t increment = 100;
    std::size_t max_rounds = 100;
    std::size_t fresh_bound = default_fresh_bound;
    Integer conc_numeral = 0;
};

// ---------------------------------------------------------------- WL

inline std::set<WlConfig> successors_wl(const WlConfig& c) {
    if (c.marker.done()) throw Undefined("successor of a finished configuration");
    const State& sigma = last_state(c.trace);
    std::set<WlConfig> r;
    for (const auto& ct : valuate(*c.marker.stmt, sigma, Mode::wl))
        if (is_consistent(ct.cond.pc)) r.insert({semantic_chop(c.trace, ct.cond.trace), ct.marker});
    return r;
}

namespace detail {

template <class Config, class Succ, class Terminal>
struct Explorer {
    Succ succ;
    Terminal terminal;
    std::set<Config> settled;
    std::set<Config> frontier;
    std::size_t steps = 0;

    void step() {
        std::set<Config> next;
        for (const auto& f : frontier) {
            if (terminal(f)) {
                settled.insert(f);
                continue;
            }
            auto s = succ(f);
            if (s.empty() && terminal_by_emptiness) settled.insert(f);
            next.merge(s);
        }
        frontier = std::move(next);
        ++steps;
    }

    void advance_to(std::size_t n) {
        while (steps < n && !frontier.empty()) step();
        steps = std::max(steps, n);
    }

    std::set<Config> result() const {
        auto r = settled;
        r.insert(frontier.begin(), frontier.end());
        return r;
    }

    // Fixpoint check at the current bound. In emptiness mode this computes
    // the next frontier as a side effect.
    bool settle() {
        if (!terminal_by_emptiness) {
            for (auto it = frontier.begin(); it != frontier.end();) {
                if (terminal(*it)) {
                    settled.insert(*it);
                    it = frontier.erase(it);
                } else {
                    ++it;
                }
            }
            return frontier.empty();
        }
        std::set<Config> next;
        for (const auto& f : frontier) {
            auto s = succ(f);
            if (s.empty()) settled.insert(f);
            next.merge(s);
        }
        if (next.empty()) {
            frontier.clear();
            return true;
        }
        frontier = std::move(next);
        ++steps;
        return false;
    }

    std::set<Config> fixpoint(const ComposePolicy& p) {
        std::size_t target = p.initial_bound;
        for (std::size_t round = 0; round < p.max_rounds; ++round) {
            advance_to(target);
            if (settle()) return settled;
            target = std::max(target + p.increment, steps);
        }
        throw DivergenceLimit("no fixpoint after " + std::to_string(p.max_rounds) + " rounds (" +
                              std::to_string(steps) + " steps)");
    }

    bool terminal_by_emptiness = false;
};

template <class Config, class Succ, class Terminal>
Explorer<Config, Succ, Terminal> explorer(Config c, Succ s, Terminal t, bool by_emptiness) {
    Explorer<Config, Succ, Terminal> e{std::move(s), std::move(t), {}, {std::move(c)}};
    e.terminal_by_emptiness = by_emptiness;
    return e;
}

inline auto wl_explorer(const WlConfig& c) {
    return explorer(c, [](const WlConfig& x) { return successors_wl(x); },
                    [](const WlConfig& x) { return x.marker.done(); }, false);
}

}  // namespace detail

inline std::set<WlConfig> compose_bounded_wl(std::size_t n, const WlConfig& c) {
    auto e = detail::wl_explorer(c);
    e.advance_to(n);
    return e.result();
}

inline std::set<WlConfig> compose_wl(const ComposePolicy& p, const WlConfig& c) {
    return detail::wl_explorer(c).fixpoint(p);
}

template <class Config>
TraceSet project_traces(const std::set<Config>& cs) {
    TraceSet r;
    for (const auto& c : cs) r.insert(c.trace);
    return r;
}

inline TraceSet traces_wl(const Stmt& s, const State& sigma, const ComposePolicy& p = {}) {
    if (!language_check(s, Mode::wl)) throw ModeError("extended statement in WL mode");
    return project_traces(compose_wl(p, {singleton(sigma), Pending(s)}));
}

inline TraceSet traces_bounded_wl(std::size_t n, const Stmt& s, const State& sigma) {
    if (!language_check(s, Mode::wl)) throw ModeError("extended statement in WL mode");
    return project_traces(compose_bounded_wl(n, {singleton(sigma), Pending(s)}));
}

// ---------------------------------------------------------------- WL_EXT

inline std::set<WlConfig> basic_successors(const WlConfig& c, const ComposePolicy& p = {}) {
    if (c.marker.done()) throw Undefined("successor of a finished configuration");
    const State& sigma = last_state(c.trace);
    const Trace prefix = c.trace.drop_last();
    std::set<WlConfig> r;
    for (const auto& ct : valuate(*c.marker.stmt, sigma, Mode::ext, p.fresh_bound)) {
        const Trace& tau = ct.cond.trace;
        State rho_tau = min_conc_map_trace(tau, p.conc_numeral);
        if (!is_consistent(eval_bexp_set(ct.cond.pc, rho_tau))) continue;
        Trace glued;
        if (prefix.cached_concrete() && rho_tau.empty()) {
            // Nothing symbolic anywhere: only the new tail needs concretizing.
            glued = concat(prefix, concretize_trace(rho_tau, tau));
        } else {
            Trace whole = concat(prefix, tau);
            glued = concretize_trace(min_conc_map_trace(whole, p.conc_numeral), whole);
        }
        r.insert({std::move(glued), ct.marker});
    }
    return r;
}

inline std::set<ExtConfig> successors1(const ExtConfig& c, const ComposePolicy& p = {}) {
    std::set<ExtConfig> r;
    for (const auto& [cm, count] : c.markers) {
        if (cm.done()) continue;
        MarkerBag rest = bag_remove(c.markers, cm);
        for (const auto& [t, cm2] : basic_successors({c.trace, cm}, p)) r.insert({t, bag_add(rest, cm2)});
    }
    return r;
}

inline std::set<ExtConfig> successors2(const MethodTable& ms, const ExtConfig& c, const ComposePolicy& p = {}) {
    const State& sigma = last_state(c.trace);
    const Trace sh = c.trace.drop_last();
    const auto& inv = sh.invocations();
    std::set<ExtConfig> r;
    if (!inv.wellformed) return r;
    for (const auto& m : ms) {
        for (const auto& v : inv.params) {
            Trace reaction = gen_event(EventMarker::invREv, sigma, {P(m.name), v});
            const auto& args = reaction.drop_last().back().event().args;
            auto it = inv.counts.find(args);
            if (it == inv.counts.end() || it->second.first <= it->second.second) continue;
            if (!v.is_a()) throw MalformedParam("method parameter is not arithmetic");
            Variable x1 = fresh_variable(sigma, "$" + m.name.name + "::Param", p.fresh_bound);
            Trace t = concat(sh, reaction).push_back(StateAtom(sigma.update(x1, E(v.a()))));
            r.insert({std::move(t), bag_add(c.markers, Pending(substitute(m.body, m.formal, x1)))});
        }
    }
    return r;
}

inline std::set<ExtConfig> successors_ext(const MethodTable& ms, const ExtConfig& c, const ComposePolicy& p = {}) {
    auto r = successors1(c, p);
    r.merge(successors2(ms, c, p));
    return r;
}

namespace detail {
inline auto ext_explorer(const MethodTable& ms, const ExtConfig& c, const ComposePolicy& p) {
    return explorer(c, [&ms, &p](const ExtConfig& x) { return successors_ext(ms, x, p); },
                    [](const ExtConfig&) { return false; }, true);
}
}  // namespace detail

inline std::set<ExtConfig> compose_bounded_ext(std::size_t n, const MethodTable& ms, const ExtConfig& c,
                                               const ComposePolicy& p = {}) {
    auto e = detail::ext_explorer(ms, c, p);
    e.advance_to(n);
    return e.result();
}

inline std::set<ExtConfig> compose_ext(const ComposePolicy& p, const MethodTable& ms, const ExtConfig& c) {
    return detail::ext_explorer(ms, c, p).fixpoint(p);
}

inline ExtConfig initial_ext_config(const Program& prog, const State& sigma) {
    return {singleton(sigma), {{Pending(prog.main), 1}}};
}

inline TraceSet traces_ext(const Program& prog, const State& sigma, const ComposePolicy& p = {}) {
    return project_traces(compose_ext(p, make_method_table(prog.methods), initial_ext_config(prog, sigma)));
}

inline TraceSet traces_bounded_ext(std::size_t n, const Program& prog, const State& sigma, const ComposePolicy& p = {}) {
    return project_traces(compose_bounded_ext(n, make_method_table(prog.methods), initial_ext_config(prog, sigma), p));
}

inline bool trace_equivalent(const Stmt& a, const Stmt& b, const State& sigma, const ComposePolicy& p = {}) {
    return traces_wl(a, sigma, p) == traces_wl(b, sigma, p);
}

inline bool trace_equivalent(const Program& a, const Program& b, const State& sigma, const ComposePolicy& p = {}) {
    return traces_ext(a, sigma, p) == traces_ext(b, sigma, p);
}

}  // namespace lagc
