#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "lagc/error.hpp"
#include "lagc/syntax.hpp"

namespace lagc {

// Finite map from variables to starred expressions, iterated in name order.
class State {
public:
    using Map = std::map<Variable, SExp>;

    State() = default;
    State(std::initializer_list<std::pair<const Variable, SExp>> init) : map_(init) {}
    explicit State(Map m) : map_(std::move(m)) {}

    const Map& map() const { return map_; }
    bool empty() const { return map_.empty(); }
    std::size_t size() const { return map_.size(); }
    bool contains(const Variable& v) const { return map_.count(v) != 0; }

    const SExp& lookup(const Variable& v) const {
        auto it = map_.find(v);
        if (it == map_.end()) throw UnboundVariable(v.name);
        return it->second;
    }

    State update(const Variable& v, SExp e) const {
        State r = *this;
        r.map_.insert_or_assign(v, std::move(e));
        return r;
    }

    auto begin() const { return map_.begin(); }
    auto end() const { return map_.end(); }

    friend bool operator==(const State&, const State&) = default;
    friend std::strong_ordering operator<=>(const State& a, const State& b) {
        return std::lexicographical_compare_three_way(
            a.map_.begin(), a.map_.end(), b.map_.begin(), b.map_.end(),
            [](const auto& x, const auto& y) {
                if (auto c = x.first <=> y.first; c != 0) return c;
                return x.second <=> y.second;
            });
    }

private:
    Map map_;
};

inline VarSet domain(const State& s) {
    VarSet r;
    for (const auto& [k, v] : s) r.insert(r.end(), k);
    return r;
}

inline State update(const State& s, const Variable& v, SExp e) { return s.update(v, std::move(e)); }

inline VarSet symbolic_vars(const State& s) {
    VarSet r;
    for (const auto& [k, v] : s)
        if (v.is_star()) r.insert(r.end(), k);
    return r;
}

inline bool is_wellformed_state(const State& s) {
    auto symb = symbolic_vars(s);
    for (const auto& [k, v] : s)
        for (const auto& x : free_vars(v))
            if (!symb.count(x)) return false;
    return true;
}

inline bool is_concrete_state(const State& s) {
    for (const auto& [k, v] : s)
        if (v.is_star() || !v.exp().is_num()) return false;
    return true;
}

inline const std::string bound_exceeded_prefix = "$BOUND_EXCEEDED::";

inline Variable vargen(const State& s, std::size_t n, std::size_t bound, const Variable& v) {
    for (;; ++n, --bound) {
        if (bound == 0) return Variable(bound_exceeded_prefix + v.name);
        Variable cand(std::string(n, 'c') + v.name);
        if (!s.contains(cand)) return cand;
    }
}

inline bool is_bound_exceeded(const Variable& v) {
    return v.name.rfind(bound_exceeded_prefix, 0) == 0;
}

inline State initial_state(const VarList& vars) {
    State::Map m;
    for (const auto& v : vars) m.emplace(v, E(Num(0)));
    return State(std::move(m));
}

}  // namespace lagc
