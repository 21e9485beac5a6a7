#pragma once

#include <algorithm>
#include <compare>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lagc {

using Integer = boost::multiprecision::cpp_int;

inline std::strong_ordering compare_int(const Integer& a, const Integer& b) {
    int c = a.compare(b);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

struct Variable {
    std::string name;
    Variable() = default;
    Variable(std::string n) : name(std::move(n)) {}
    Variable(const char* n) : name(n) {}
    bool operator==(const Variable&) const = default;
    auto operator<=>(const Variable&) const = default;
};

struct MethodName {
    std::string name;
    MethodName() = default;
    MethodName(std::string n) : name(std::move(n)) {}
    MethodName(const char* n) : name(n) {}
    bool operator==(const MethodName&) const = default;
    auto operator<=>(const MethodName&) const = default;
};

enum class ArithOp { add, sub, mul };
enum class BoolOp { conj, disj };
enum class RelOp { leq, geq, eq };

using VarSet = std::set<Variable>;
using VarList = std::vector<Variable>;

// ---------------------------------------------------------------- AExp

class AExp {
public:
    enum class Kind { num, var, bin };

    static AExp num(Integer n) { return AExp(std::make_shared<const Rep>(Rep{Kind::num, std::move(n), {}, {}, {}, {}})); }
    static AExp var(Variable v) { return AExp(std::make_shared<const Rep>(Rep{Kind::var, 0, std::move(v), {}, {}, {}})); }
    static AExp bin(AExp l, ArithOp op, AExp r) {
        return AExp(std::make_shared<const Rep>(Rep{Kind::bin, 0, {}, op, std::move(l.rep_), std::move(r.rep_)}));
    }

    Kind kind() const { return rep_->kind; }
    bool is_num() const { return rep_->kind == Kind::num; }
    const Integer& value() const { return rep_->value; }
    const Variable& var() const { return rep_->var; }
    ArithOp op() const { return rep_->op; }
    AExp left() const { return AExp(rep_->l); }
    AExp right() const { return AExp(rep_->r); }

    friend std::strong_ordering operator<=>(const AExp& a, const AExp& b) {
        if (a.rep_ == b.rep_) return std::strong_ordering::equal;
        if (auto c = a.kind() <=> b.kind(); c != 0) return c;
        switch (a.kind()) {
            case Kind::num: return compare_int(a.value(), b.value());
            case Kind::var: return a.var() <=> b.var();
            case Kind::bin:
                if (auto c = a.left() <=> b.left(); c != 0) return c;
                if (auto c = a.op() <=> b.op(); c != 0) return c;
                return a.right() <=> b.right();
        }
        return std::strong_ordering::equal;
    }
    friend bool operator==(const AExp& a, const AExp& b) { return (a <=> b) == 0; }

private:
    struct Rep {
        Kind kind;
        Integer value;
        Variable var;
        ArithOp op;
        std::shared_ptr<const Rep> l, r;
    };
    explicit AExp(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;
};

inline AExp Num(Integer n) { return AExp::num(std::move(n)); }
inline AExp Var(Variable v) { return AExp::var(std::move(v)); }
inline AExp Add(AExp l, AExp r) { return AExp::bin(std::move(l), ArithOp::add, std::move(r)); }
inline AExp Sub(AExp l, AExp r) { return AExp::bin(std::move(l), ArithOp::sub, std::move(r)); }
inline AExp Mul(AExp l, AExp r) { return AExp::bin(std::move(l), ArithOp::mul, std::move(r)); }

// ---------------------------------------------------------------- BExp

class BExp {
public:
    enum class Kind { lit, not_, bin, rel };

    static BExp lit(bool b) { return BExp(std::make_shared<const Rep>(Rep{Kind::lit, b, {}, {}, {}, {}, {}, {}})); }
    static BExp negate(BExp b) { return BExp(std::make_shared<const Rep>(Rep{Kind::not_, false, {}, {}, std::move(b.rep_), {}, {}, {}})); }
    static BExp bin(BExp l, BoolOp op, BExp r) {
        return BExp(std::make_shared<const Rep>(Rep{Kind::bin, false, op, {}, std::move(l.rep_), std::move(r.rep_), {}, {}}));
    }
    static BExp rel(AExp l, RelOp op, AExp r) {
        return BExp(std::make_shared<const Rep>(Rep{Kind::rel, false, {}, op, {}, {}, std::move(l), std::move(r)}));
    }

    Kind kind() const { return rep_->kind; }
    bool is_lit() const { return rep_->kind == Kind::lit; }
    bool value() const { return rep_->value; }
    BoolOp bool_op() const { return rep_->bop; }
    RelOp rel_op() const { return rep_->rop; }
    // Not: operand(); BinB: left()/right()
    BExp operand() const { return BExp(rep_->l); }
    BExp left() const { return BExp(rep_->l); }
    BExp right() const { return BExp(rep_->r); }
    // Rel
    const AExp& aleft() const { return *rep_->al; }
    const AExp& aright() const { return *rep_->ar; }

    friend std::strong_ordering operator<=>(const BExp& a, const BExp& b) {
        if (a.rep_ == b.rep_) return std::strong_ordering::equal;
        if (auto c = a.kind() <=> b.kind(); c != 0) return c;
        switch (a.kind()) {
            case Kind::lit: return a.value() <=> b.value();
            case Kind::not_: return a.operand() <=> b.operand();
            case Kind::bin:
                if (auto c = a.left() <=> b.left(); c != 0) return c;
                if (auto c = a.bool_op() <=> b.bool_op(); c != 0) return c;
                return a.right() <=> b.right();
            case Kind::rel:
                if (auto c = a.aleft() <=> b.aleft(); c != 0) return c;
                if (auto c = a.rel_op() <=> b.rel_op(); c != 0) return c;
                return a.aright() <=> b.aright();
        }
        return std::strong_ordering::equal;
    }
    friend bool operator==(const BExp& a, const BExp& b) { return (a <=> b) == 0; }

private:
    struct Rep {
        Kind kind;
        bool value;
        BoolOp bop;
        RelOp rop;
        std::shared_ptr<const Rep> l, r;
        std::optional<AExp> al, ar;
    };
    explicit BExp(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;
};

inline BExp Bool(bool b) { return BExp::lit(b); }
inline BExp Not(BExp b) { return BExp::negate(std::move(b)); }
inline BExp And(BExp l, BExp r) { return BExp::bin(std::move(l), BoolOp::conj, std::move(r)); }
inline BExp Or(BExp l, BExp r) { return BExp::bin(std::move(l), BoolOp::disj, std::move(r)); }
inline BExp Leq(AExp l, AExp r) { return BExp::rel(std::move(l), RelOp::leq, std::move(r)); }
inline BExp Geq(AExp l, AExp r) { return BExp::rel(std::move(l), RelOp::geq, std::move(r)); }
inline BExp Eq(AExp l, AExp r) { return BExp::rel(std::move(l), RelOp::eq, std::move(r)); }

// ---------------------------------------------------------------- Exp, SExp

// A a | B b | P m, ordered by alternative index first.
struct Exp {
    std::variant<AExp, BExp, MethodName> v;

    bool is_a() const { return v.index() == 0; }
    bool is_b() const { return v.index() == 1; }
    bool is_p() const { return v.index() == 2; }
    const AExp& a() const { return std::get<0>(v); }
    const BExp& b() const { return std::get<1>(v); }
    const MethodName& p() const { return std::get<2>(v); }

    friend bool operator==(const Exp&, const Exp&) = default;
    friend std::strong_ordering operator<=>(const Exp& x, const Exp& y) {
        if (auto c = x.v.index() <=> y.v.index(); c != 0) return c;
        switch (x.v.index()) {
            case 0: return x.a() <=> y.a();
            case 1: return x.b() <=> y.b();
            default: return x.p() <=> y.p();
        }
    }
};

inline Exp A(AExp a) { return Exp{std::move(a)}; }
inline Exp B(BExp b) { return Exp{std::move(b)}; }
inline Exp P(MethodName m) { return Exp{std::move(m)}; }

using ExpList = std::vector<Exp>;

// E a | Star
struct SExp {
    std::optional<AExp> e;

    bool is_star() const { return !e.has_value(); }
    const AExp& exp() const { return *e; }

    friend bool operator==(const SExp&, const SExp&) = default;
    friend std::strong_ordering operator<=>(const SExp& x, const SExp& y) {
        if (x.is_star() || y.is_star()) return x.is_star() <=> y.is_star();
        return x.exp() <=> y.exp();
    }
};

inline SExp E(AExp a) { return SExp{std::move(a)}; }
inline const SExp Star{};

// ---------------------------------------------------------------- Stmt

using VarDecl = std::vector<Variable>;

class Stmt {
public:
    enum class Kind { skip, assign, if_, while_, seq, par, scope, input, guard, call };

    static Stmt skip() { return make(Rep{Kind::skip}); }
    static Stmt assign(Variable x, AExp a) { Rep r{Kind::assign}; r.var = std::move(x); r.aexp = std::move(a); return make(std::move(r)); }
    static Stmt if_(BExp b, Stmt s) { Rep r{Kind::if_}; r.cond = std::move(b); r.s1 = std::move(s.rep_); return make(std::move(r)); }
    static Stmt while_(BExp b, Stmt s) { Rep r{Kind::while_}; r.cond = std::move(b); r.s1 = std::move(s.rep_); return make(std::move(r)); }
    static Stmt seq(Stmt a, Stmt b) { Rep r{Kind::seq}; r.s1 = std::move(a.rep_); r.s2 = std::move(b.rep_); return make(std::move(r)); }
    static Stmt par(Stmt a, Stmt b) { Rep r{Kind::par}; r.s1 = std::move(a.rep_); r.s2 = std::move(b.rep_); return make(std::move(r)); }
    static Stmt scope(VarDecl d, Stmt s) { Rep r{Kind::scope}; r.decl = std::move(d); r.s1 = std::move(s.rep_); return make(std::move(r)); }
    static Stmt input(Variable x) { Rep r{Kind::input}; r.var = std::move(x); return make(std::move(r)); }
    static Stmt guard(BExp b, Stmt s) { Rep r{Kind::guard}; r.cond = std::move(b); r.s1 = std::move(s.rep_); return make(std::move(r)); }
    static Stmt call(MethodName m, AExp a) { Rep r{Kind::call}; r.method = std::move(m); r.aexp = std::move(a); return make(std::move(r)); }

    Kind kind() const { return rep_->kind; }
    const Variable& var() const { return rep_->var; }
    const AExp& aexp() const { return *rep_->aexp; }
    const BExp& cond() const { return *rep_->cond; }
    const VarDecl& decl() const { return rep_->decl; }
    const MethodName& method() const { return rep_->method; }
    // If/While/Scope/Guard: body(); Seq/Par: first()/second()
    Stmt body() const { return Stmt(rep_->s1); }
    Stmt first() const { return Stmt(rep_->s1); }
    Stmt second() const { return Stmt(rep_->s2); }

    friend std::strong_ordering operator<=>(const Stmt& a, const Stmt& b) {
        if (a.rep_ == b.rep_) return std::strong_ordering::equal;
        if (auto c = a.kind() <=> b.kind(); c != 0) return c;
        switch (a.kind()) {
            case Kind::skip: return std::strong_ordering::equal;
            case Kind::assign:
                if (auto c = a.var() <=> b.var(); c != 0) return c;
                return a.aexp() <=> b.aexp();
            case Kind::if_:
            case Kind::while_:
            case Kind::guard:
                if (auto c = a.cond() <=> b.cond(); c != 0) return c;
                return a.body() <=> b.body();
            case Kind::seq:
            case Kind::par:
                if (auto c = a.first() <=> b.first(); c != 0) return c;
                return a.second() <=> b.second();
            case Kind::scope:
                if (auto c = a.decl() <=> b.decl(); c != 0) return c;
                return a.body() <=> b.body();
            case Kind::input: return a.var() <=> b.var();
            case Kind::call:
                if (auto c = a.method() <=> b.method(); c != 0) return c;
                return a.aexp() <=> b.aexp();
        }
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Stmt& a, const Stmt& b) { return (a <=> b) == 0; }

private:
    struct Rep {
        Kind kind;
        Variable var{};
        std::optional<AExp> aexp{};
        std::optional<BExp> cond{};
        VarDecl decl{};
        MethodName method{};
        std::shared_ptr<const Rep> s1{}, s2{};
    };
    static Stmt make(Rep r) { return Stmt(std::make_shared<const Rep>(std::move(r))); }
    explicit Stmt(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;
};

inline Stmt Skip() { return Stmt::skip(); }
inline Stmt Assign(Variable x, AExp a) { return Stmt::assign(std::move(x), std::move(a)); }
inline Stmt If(BExp b, Stmt s) { return Stmt::if_(std::move(b), std::move(s)); }
inline Stmt While(BExp b, Stmt s) { return Stmt::while_(std::move(b), std::move(s)); }
inline Stmt Seq(Stmt a, Stmt b) { return Stmt::seq(std::move(a), std::move(b)); }
inline Stmt LocPar(Stmt a, Stmt b) { return Stmt::par(std::move(a), std::move(b)); }
inline Stmt LocMem(VarDecl d, Stmt s) { return Stmt::scope(std::move(d), std::move(s)); }
inline Stmt Input(Variable x) { return Stmt::input(std::move(x)); }
inline Stmt Guard(BExp b, Stmt s) { return Stmt::guard(std::move(b), std::move(s)); }
inline Stmt Call(MethodName m, AExp a) { return Stmt::call(std::move(m), std::move(a)); }

struct Method {
    MethodName name;
    Variable formal;
    Stmt body;
    friend bool operator==(const Method&, const Method&) = default;
    friend std::strong_ordering operator<=>(const Method&, const Method&) = default;
};

struct Program {
    std::vector<Method> methods;
    Stmt main;
    friend bool operator==(const Program&, const Program&) = default;
    friend std::strong_ordering operator<=>(const Program&, const Program&) = default;
};

// ---------------------------------------------------------------- free_vars

namespace detail {
inline void vars_into(const AExp& a, VarSet& out) {
    switch (a.kind()) {
        case AExp::Kind::num: return;
        case AExp::Kind::var: out.insert(a.var()); return;
        case AExp::Kind::bin: vars_into(a.left(), out); vars_into(a.right(), out); return;
    }
}
inline void vars_into(const BExp& b, VarSet& out) {
    switch (b.kind()) {
        case BExp::Kind::lit: return;
        case BExp::Kind::not_: vars_into(b.operand(), out); return;
        case BExp::Kind::bin: vars_into(b.left(), out); vars_into(b.right(), out); return;
        case BExp::Kind::rel: vars_into(b.aleft(), out); vars_into(b.aright(), out); return;
    }
}
inline void occ_into(const AExp& a, VarList& out) {
    switch (a.kind()) {
        case AExp::Kind::num: return;
        case AExp::Kind::var: out.push_back(a.var()); return;
        case AExp::Kind::bin: occ_into(a.left(), out); occ_into(a.right(), out); return;
    }
}
inline void occ_into(const BExp& b, VarList& out) {
    switch (b.kind()) {
        case BExp::Kind::lit: return;
        case BExp::Kind::not_: occ_into(b.operand(), out); return;
        case BExp::Kind::bin: occ_into(b.left(), out); occ_into(b.right(), out); return;
        case BExp::Kind::rel: occ_into(b.aleft(), out); occ_into(b.aright(), out); return;
    }
}
}  // namespace detail

inline VarSet free_vars(const AExp& a) { VarSet s; detail::vars_into(a, s); return s; }
inline VarSet free_vars(const BExp& b) { VarSet s; detail::vars_into(b, s); return s; }
inline VarSet free_vars(const Exp& e) {
    if (e.is_a()) return free_vars(e.a());
    if (e.is_b()) return free_vars(e.b());
    return {};
}
inline VarSet free_vars(const SExp& e) { return e.is_star() ? VarSet{} : free_vars(e.exp()); }
inline VarSet free_vars(const ExpList& l) {
    VarSet s;
    for (const auto& e : l) s.merge(free_vars(e));
    return s;
}
inline VarSet free_vars(const std::set<BExp>& pc) {
    VarSet s;
    for (const auto& b : pc) detail::vars_into(b, s);
    return s;
}
inline VarSet free_vars(const VarDecl& d) { return VarSet(d.begin(), d.end()); }

inline VarSet free_vars(const Stmt& s) {
    using K = Stmt::Kind;
    switch (s.kind()) {
        case K::skip: return {};
        case K::assign: { auto r = free_vars(s.aexp()); r.insert(s.var()); return r; }
        case K::if_:
        case K::while_:
        case K::guard: { auto r = free_vars(s.cond()); r.merge(free_vars(s.body())); return r; }
        case K::seq:
        case K::par: { auto r = free_vars(s.first()); r.merge(free_vars(s.second())); return r; }
        case K::scope: {
            auto r = free_vars(s.body());
            for (const auto& v : s.decl()) r.erase(v);
            return r;
        }
        case K::input: return {s.var()};
        case K::call: return free_vars(s.aexp());
    }
    return {};
}

inline VarSet free_vars(const Method& m) {
    auto r = free_vars(m.body);
    r.erase(m.formal);
    return r;
}

inline VarSet free_vars(const Program& p) {
    VarSet r;
    for (const auto& m : p.methods) r.merge(free_vars(m));
    r.merge(free_vars(p.main));
    return r;
}

// Declared scope variables and formals; they are never free.
inline VarSet bound_vars(const Stmt& s) {
    using K = Stmt::Kind;
    switch (s.kind()) {
        case K::if_:
        case K::while_:
        case K::guard: return bound_vars(s.body());
        case K::seq:
        case K::par: { auto r = bound_vars(s.first()); r.merge(bound_vars(s.second())); return r; }
        case K::scope: { auto r = bound_vars(s.body()); r.insert(s.decl().begin(), s.decl().end()); return r; }
        default: return {};
    }
}
inline VarSet bound_vars(const Method& m) { auto r = bound_vars(m.body); r.insert(m.formal); return r; }
inline VarSet bound_vars(const Program& p) {
    VarSet r = bound_vars(p.main);
    for (const auto& m : p.methods) r.merge(bound_vars(m));
    return r;
}

// ---------------------------------------------------------------- occurrences

inline VarList occurrences(const AExp& a) { VarList l; detail::occ_into(a, l); return l; }
inline VarList occurrences(const BExp& b) { VarList l; detail::occ_into(b, l); return l; }
inline VarList occurrences(const VarDecl& d) { return d; }

namespace detail {
inline void occ_into(const Stmt& s, VarList& out) {
    using K = Stmt::Kind;
    switch (s.kind()) {
        case K::skip: return;
        case K::assign: out.push_back(s.var()); occ_into(s.aexp(), out); return;
        case K::if_:
        case K::while_:
        case K::guard: occ_into(s.cond(), out); occ_into(s.body(), out); return;
        case K::seq:
        case K::par: occ_into(s.first(), out); occ_into(s.second(), out); return;
        case K::scope: {
            VarList inner;
            occ_into(s.body(), inner);
            const auto& d = s.decl();
            for (auto& v : inner)
                if (std::find(d.begin(), d.end(), v) == d.end()) out.push_back(std::move(v));
            return;
        }
        case K::input: out.push_back(s.var()); return;
        case K::call: occ_into(s.aexp(), out); return;
    }
}
}  // namespace detail

inline VarList occurrences(const Stmt& s) { VarList l; detail::occ_into(s, l); return l; }

inline VarList occurrences(const Method& m) {
    auto l = occurrences(m.body);
    std::erase(l, m.formal);
    return l;
}

inline VarList occurrences(const Program& p) {
    VarList l;
    for (const auto& m : p.methods) {
        auto o = occurrences(m);
        l.insert(l.end(), o.begin(), o.end());
    }
    auto o = occurrences(p.main);
    l.insert(l.end(), o.begin(), o.end());
    return l;
}

// ---------------------------------------------------------------- substitute

inline Variable substitute(const Variable& v, const Variable& old, const Variable& nu) {
    return v == old ? nu : v;
}

inline AExp substitute(const AExp& a, const Variable& old, const Variable& nu) {
    switch (a.kind()) {
        case AExp::Kind::num: return a;
        case AExp::Kind::var: return a.var() == old ? Var(nu) : a;
        case AExp::Kind::bin:
            return AExp::bin(substitute(a.left(), old, nu), a.op(), substitute(a.right(), old, nu));
    }
    return a;
}

inline BExp substitute(const BExp& b, const Variable& old, const Variable& nu) {
    switch (b.kind()) {
        case BExp::Kind::lit: return b;
        case BExp::Kind::not_: return Not(substitute(b.operand(), old, nu));
        case BExp::Kind::bin:
            return BExp::bin(substitute(b.left(), old, nu), b.bool_op(), substitute(b.right(), old, nu));
        case BExp::Kind::rel:
            return BExp::rel(substitute(b.aleft(), old, nu), b.rel_op(), substitute(b.aright(), old, nu));
    }
    return b;
}

inline Exp substitute(const Exp& e, const Variable& old, const Variable& nu) {
    if (e.is_a()) return A(substitute(e.a(), old, nu));
    if (e.is_b()) return B(substitute(e.b(), old, nu));
    return e;
}

inline SExp substitute(const SExp& e, const Variable& old, const Variable& nu) {
    return e.is_star() ? e : E(substitute(e.exp(), old, nu));
}

inline VarDecl substitute(const VarDecl& d, const Variable& old, const Variable& nu) {
    VarDecl r;
    r.reserve(d.size());
    for (const auto& v : d) r.push_back(substitute(v, old, nu));
    return r;
}

inline Stmt substitute(const Stmt& s, const Variable& old, const Variable& nu) {
    using K = Stmt::Kind;
    switch (s.kind()) {
        case K::skip: return s;
        case K::assign: return Assign(substitute(s.var(), old, nu), substitute(s.aexp(), old, nu));
        case K::if_: return If(substitute(s.cond(), old, nu), substitute(s.body(), old, nu));
        case K::while_: return While(substitute(s.cond(), old, nu), substitute(s.body(), old, nu));
        case K::guard: return Guard(substitute(s.cond(), old, nu), substitute(s.body(), old, nu));
        case K::seq: return Seq(substitute(s.first(), old, nu), substitute(s.second(), old, nu));
        case K::par: return LocPar(substitute(s.first(), old, nu), substitute(s.second(), old, nu));
        case K::scope: return LocMem(substitute(s.decl(), old, nu), substitute(s.body(), old, nu));
        case K::input: return Input(substitute(s.var(), old, nu));
        case K::call: return Call(s.method(), substitute(s.aexp(), old, nu));
    }
    return s;
}

inline Method substitute(const Method& m, const Variable& old, const Variable& nu) {
    return Method{m.name, substitute(m.formal, old, nu), substitute(m.body, old, nu)};
}

inline Program substitute(const Program& p, const Variable& old, const Variable& nu) {
    Program r{{}, substitute(p.main, old, nu)};
    for (const auto& m : p.methods) r.methods.push_back(substitute(m, old, nu));
    return r;
}

// ---------------------------------------------------------------- language_check

enum class Mode { wl, ext };

inline bool language_check(const Stmt& s, Mode mode) {
    if (mode == Mode::ext) return true;
    using K = Stmt::Kind;
    switch (s.kind()) {
        case K::skip:
        case K::assign: return true;
        case K::if_:
        case K::while_: return language_check(s.body(), mode);
        case K::seq: return language_check(s.first(), mode) && language_check(s.second(), mode);
        default: return false;
    }
}

}  // namespace lagc
