#pragma once

#include <initializer_list>
#include <map>
#include <memory>
#include <set>
#include <variant>
#include <vector>

#include "lagc/eval.hpp"

namespace lagc {

enum class EventMarker { inpEv, invEv, invREv };

struct Event {
    EventMarker ev;
    ExpList args;
    friend bool operator==(const Event&, const Event&) = default;
    friend std::strong_ordering operator<=>(const Event& a, const Event& b) {
        if (auto c = a.ev <=> b.ev; c != 0) return c;
        return std::lexicographical_compare_three_way(a.args.begin(), a.args.end(), b.args.begin(), b.args.end());
    }
};

struct TraceAtom {
    std::variant<State, Event> v;

    TraceAtom(State s) : v(std::move(s)) {}
    TraceAtom(Event e) : v(std::move(e)) {}

    bool is_state() const { return v.index() == 0; }
    bool is_event() const { return v.index() == 1; }
    const State& state() const { return std::get<0>(v); }
    const Event& event() const { return std::get<1>(v); }

    friend bool operator==(const TraceAtom&, const TraceAtom&) = default;
    friend std::strong_ordering operator<=>(const TraceAtom& a, const TraceAtom& b) {
        if (auto c = a.v.index() <=> b.v.index(); c != 0) return c;
        return a.is_state() ? a.state() <=> b.state() : a.event() <=> b.event();
    }
};

inline TraceAtom StateAtom(State s) { return TraceAtom(std::move(s)); }
inline TraceAtom EventAtom(EventMarker ev, ExpList args) { return TraceAtom(Event{ev, std::move(args)}); }

inline bool is_concrete_atom(const TraceAtom& a) {
    return a.is_state() ? is_concrete_state(a.state()) : is_concrete(a.event().args);
}

// Persistent snoc list. Appending shares the prefix; every node caches
// concreteness of its prefix and a running invocation summary so the
// composition engine never rescans whole traces.
class Trace {
public:
    struct Invocations {
        std::map<ExpList, std::pair<std::size_t, std::size_t>> counts;  // invEv, invREv
        std::set<Exp> params;
        bool wellformed = true;
    };

    Trace() = default;
    Trace(std::initializer_list<TraceAtom> atoms) {
        for (const auto& a : atoms) *this = push_back(a);
    }
    explicit Trace(const std::vector<TraceAtom>& atoms) {
        for (const auto& a : atoms) *this = push_back(a);
    }

    std::size_t size() const { return node_ ? node_->size : 0; }
    bool empty() const { return !node_; }
    const TraceAtom& back() const { return node_->atom; }
    Trace drop_last() const { return Trace(node_->prev); }

    Trace push_back(TraceAtom a) const {
        auto n = std::make_shared<Node>(Node{node_, std::move(a), size() + 1, true, {}});
        n->concrete = (!node_ || node_->concrete) && is_concrete_atom(n->atom);
        n->inv = node_ ? node_->inv : empty_invocations();
        if (n->atom.is_event() && n->atom.event().ev != EventMarker::inpEv) {
            auto inv = std::make_shared<Invocations>(*n->inv);
            const auto& e = n->atom.event();
            auto& [calls, reactions] = inv->counts[e.args];
            if (e.ev == EventMarker::invEv) {
                ++calls;
                if (e.args.size() == 2 && e.args[0].is_p() && e.args[1].is_a()) inv->params.insert(e.args[1]);
            } else {
                inv->wellformed = inv->wellformed && calls > reactions;
                ++reactions;
            }
            n->inv = std::move(inv);
        }
        return Trace(std::move(n));
    }

    std::vector<TraceAtom> atoms() const {
        std::vector<TraceAtom> r(size(), TraceAtom(State{}));
        std::size_t i = size();
        for (const Node* n = node_.get(); n; n = n->prev.get()) r[--i] = n->atom;
        return r;
    }

    template <class F>
    void for_each_back(F&& f) const {
        for (const Node* n = node_.get(); n; n = n->prev.get()) f(n->atom);
    }

    bool cached_concrete() const { return !node_ || node_->concrete; }
    const Invocations& invocations() const { return node_ ? *node_->inv : *empty_invocations(); }

    // Internal order: length first, then atoms from the back. Shared
    // suffix nodes short-circuit.
    friend std::strong_ordering operator<=>(const Trace& a, const Trace& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        const Node* x = a.node_.get();
        const Node* y = b.node_.get();
        for (; x != y; x = x->prev.get(), y = y->prev.get())
            if (auto c = x->atom <=> y->atom; c != 0) return c;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Trace& a, const Trace& b) { return (a <=> b) == 0; }

private:
    struct Node {
        std::shared_ptr<const Node> prev;
        TraceAtom atom;
        std::size_t size;
        bool concrete;
        std::shared_ptr<const Invocations> inv;
    };
    static const std::shared_ptr<const Invocations>& empty_invocations() {
        static const auto e = std::make_shared<const Invocations>();
        return e;
    }
    explicit Trace(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Front-to-back lexicographic order, used for rendering.
inline bool front_to_back_less(const Trace& a, const Trace& b) {
    auto x = a.atoms();
    auto y = b.atoms();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

using PathCondition = std::set<BExp>;

struct ConditionedTrace {
    PathCondition pc;
    Trace trace;
    friend bool operator==(const ConditionedTrace&, const ConditionedTrace&) = default;
    friend std::strong_ordering operator<=>(const ConditionedTrace& a, const ConditionedTrace& b) {
        if (auto c = std::lexicographical_compare_three_way(a.pc.begin(), a.pc.end(), b.pc.begin(), b.pc.end()); c != 0)
            return c;
        return a.trace <=> b.trace;
    }
};

inline Trace singleton(State s) { return Trace{StateAtom(std::move(s))}; }

inline Trace concat(const Trace& a, const Trace& b) {
    Trace r = a;
    for (auto& x : b.atoms()) r = r.push_back(std::move(x));
    return r;
}

inline const State& first_state(const Trace& t) {
    if (t.empty()) throw Undefined("first state of the empty trace");
    const TraceAtom* first = nullptr;
    t.for_each_back([&](const TraceAtom& a) { first = &a; });
    if (!first->is_state()) throw Undefined("trace does not begin with a state");
    return first->state();
}

inline const State& last_state(const Trace& t) {
    if (t.empty() || !t.back().is_state()) throw Undefined("trace does not end with a state");
    return t.back().state();
}

inline Trace semantic_chop(const Trace& a, const Trace& b) {
    if (a.empty() || !a.back().is_state()) throw Undefined("semantic chop: left trace does not end with a state");
    return concat(a.drop_last(), b);
}

inline ConditionedTrace semantic_chop_cond(const ConditionedTrace& a, const ConditionedTrace& b) {
    PathCondition pc = a.pc;
    pc.insert(b.pc.begin(), b.pc.end());
    return {std::move(pc), semantic_chop(a.trace, b.trace)};
}

inline Trace gen_event(EventMarker ev, const State& s, const ExpList& args) {
    return Trace{StateAtom(s), EventAtom(ev, eval_exp_list(args, s)), StateAtom(s)};
}

inline VarSet trace_symbolic_vars(const Trace& t) {
    VarSet r;
    t.for_each_back([&](const TraceAtom& a) {
        if (a.is_state()) r.merge(symbolic_vars(a.state()));
    });
    return r;
}

namespace detail {
inline bool includes(const VarSet& small, const VarSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Condition (4a), read exactly as the inductive definition: only an event
// sandwiched between two states is checked.
inline bool wf_surround(const std::vector<TraceAtom>& a) {
    std::size_t i = a.size();
    while (i > 0) {
        std::size_t k = i - 1;
        if (k >= 2 && a[k].is_state() && a[k - 1].is_event() && a[k - 2].is_state()) {
            if (a[k].state() != a[k - 2].state()) return false;
            i -= 2;
        } else {
            i -= 1;
        }
    }
    return true;
}
}  // namespace detail

inline bool is_wellformed_cond_trace(const ConditionedTrace& p) {
    const auto atoms = p.trace.atoms();
    const VarSet symb = trace_symbolic_vars(p.trace);
    for (const auto& a : atoms) {
        if (a.is_state()) {
            const auto& s = a.state();
            for (const auto& [k, v] : s)
                if (!v.is_star() && symb.count(k)) return false;  // (1)
            if (!is_wellformed_state(s)) return false;            // (5)
        } else if (!detail::includes(free_vars(a.event().args), symb)) {
            return false;  // (3)
        }
    }
    if (!detail::includes(free_vars(p.pc), symb)) return false;  // (2)
    if (atoms.empty() || !atoms.front().is_state() || !atoms.back().is_state()) return false;  // (4b)
    return detail::wf_surround(atoms);
}

inline bool is_consistent(const PathCondition& pc) {
    for (const auto& b : pc)
        if (!b.is_lit() || !b.value()) return false;
    return true;
}

inline bool is_concrete_trace(const Trace& t) {
    bool ok = true;
    t.for_each_back([&](const TraceAtom& a) { ok = ok && is_concrete_atom(a); });
    return ok;
}

inline bool is_concrete_cond_trace(const ConditionedTrace& p) {
    return is_wellformed_cond_trace(p) && is_concrete(p.pc) && is_concrete_trace(p.trace);
}

inline std::size_t count_atom(const Trace& t, const TraceAtom& x) {
    std::size_t n = 0;
    t.for_each_back([&](const TraceAtom& a) { n += (a == x); });
    return n;
}

inline bool invocation_wellformed(const Trace& t) {
    std::map<ExpList, std::pair<std::size_t, std::size_t>> seen;
    for (const auto& a : t.atoms()) {
        if (!a.is_event()) continue;
        const auto& e = a.event();
        auto& [calls, reactions] = seen[e.args];
        if (e.ev == EventMarker::invEv) ++calls;
        if (e.ev == EventMarker::invREv && calls <= reactions++) return false;
    }
    return true;
}

inline std::set<Exp> harvest_params(const Trace& t) {
    std::set<Exp> r;
    t.for_each_back([&](const TraceAtom& a) {
        if (!a.is_event()) return;
        const auto& e = a.event();
        if (e.ev == EventMarker::invEv && e.args.size() == 2 && e.args[0].is_p() && e.args[1].is_a()) r.insert(e.args[1]);
    });
    return r;
}

}  // namespace lagc
