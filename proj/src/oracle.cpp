// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "hfl/oracle.hpp"

namespace hfl {

namespace {

// Variable stack searched innermost first, so quantifier bindings need no map
// copies.
struct Scope {
    const Env &env;
    std::vector<std::pair<const std::string *, HFSet>> stack;

    HFSet lookup(const Term &t) const {
        if (!t.is_var()) return t.value;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it)
            if (*it->first == t.name) return it->second;
        auto it = env.assignment.find(t.name);
        if (it == env.assignment.end())
            throw Error(ErrorKind::UnboundVariable, "variable '" + t.name + "' is not assigned");
        return it->second;
    }
};

bool eval(const FormulaNode &f, Scope &s);

bool quantify(const FormulaNode &f, Scope &s, HFSet domain, bool universal) {
    s.stack.emplace_back(&f.var, HFSet());
    bool result = universal;
    for (HFSet x : domain) {
        s.stack.back().second = x;
        if (eval(*f.a, s) != universal) {
            result = !universal;
            break;
        }
    }
    s.stack.pop_back();
    return result;
}

bool eval(const FormulaNode &f, Scope &s) {
    switch (f.kind) {
    case FKind::Falsum: return false;
    case FKind::Eq: return s.lookup(f.lhs) == s.lookup(f.rhs);
    case FKind::In: return s.lookup(f.rhs).contains(s.lookup(f.lhs));
    case FKind::And: return eval(*f.a, s) && eval(*f.b, s);
    case FKind::Or: return eval(*f.a, s) || eval(*f.b, s);
    case FKind::Imp: return !eval(*f.a, s) || eval(*f.b, s);
    case FKind::BForall: return quantify(f, s, s.lookup(f.bound), true);
    case FKind::BExists: return quantify(f, s, s.lookup(f.bound), false);
    case FKind::SubForall: return quantify(f, s, powerset(s.lookup(f.bound), 16), true);
    case FKind::SubExists: return quantify(f, s, powerset(s.lookup(f.bound), 16), false);
    case FKind::UForall:
    case FKind::UExists:
        if (!s.env.universe_bound)
            throw Error(ErrorKind::UnboundedWithoutUniverse, "unbounded quantifier over '" + f.var + "'");
        return quantify(f, s, *s.env.universe_bound, f.kind == FKind::UForall);
    }
    return false;
}

} // namespace

HFSet term_value(const Term &t, const Env &env) {
    Scope s{env, {}};
    return s.lookup(t);
}

bool eval_formula(const Formula &f, const Env &env) {
    Scope s{env, {}};
    return eval(*f, s);
}

HFSet comprehension(const Formula &f, const std::vector<std::string> &vars, const std::vector<HFSet> &args) {
    if (vars.size() != args.size() || vars.empty())
        throw Error(ErrorKind::InvalidArgument, "comprehension needs one argument per variable");
    const std::size_t n = vars.size();
    std::vector<std::vector<HFSet>> doms;
    for (HFSet a : args) {
        if (a.is_empty()) return HFSet();
        doms.emplace_back(a.begin(), a.end());
    }
    Env env;
    std::vector<std::size_t> idx(n, 0);
    std::vector<HFSet> out;
    std::vector<HFSet> tuple(n);
    for (;;) {
        for (std::size_t k = 0; k < n; ++k) env.assignment[vars[k]] = doms[k][idx[k]];
        if (eval_formula(f, env)) {
            for (std::size_t k = 0; k < n; ++k) tuple[n - 1 - k] = doms[k][idx[k]];
            out.push_back(hfl::make_tuple(tuple));
        }
        std::size_t k = 0;
        while (k < n && ++idx[k] == doms[k].size()) idx[k++] = 0;
        if (k == n) break;
    }
    return HFSet::of(std::move(out));
}

} // namespace hfl
