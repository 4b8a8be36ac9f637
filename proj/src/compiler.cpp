// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "hfl/compiler.hpp"

#include <algorithm>

#include "hfl/oracle.hpp"

namespace hfl {

namespace {

OpTerm pair2(OpTerm x, OpTerm y) { return app(OpCode::Pair, std::move(x), std::move(y)); }
OpTerm kpair(const OpTerm &x, const OpTerm &y) { return pair2(pair2(x, x), pair2(x, y)); }
OpTerm ran(const OpTerm &x) { return app(OpCode::Ran, x, x); }
OpTerm dom(const OpTerm &x) { return app(OpCode::Dom, x, x); }
OpTerm big_union(const OpTerm &x) { return app(OpCode::Union, x, x); }

// Compilation state: positions 1..n with their argument terms and names.
struct Ctx {
    std::vector<OpTerm> args;
    std::vector<std::string> names;

    std::size_t n() const { return args.size(); }
    // a_n × ... × a_1 restricted to the first k positions
    OpTerm product(std::size_t k) const {
        OpTerm p = args[0];
        for (std::size_t m = 1; m < k; ++m) p = app(OpCode::Times, args[m], p);
        return p;
    }
    // 1-based position of a variable, innermost binding first
    std::size_t position(const std::string &v) const {
        for (std::size_t k = names.size(); k-- > 0;)
            if (names[k] == v) return k + 1;
        throw Error(ErrorKind::UnboundVariable, "variable '" + v + "' is not in the variable list");
    }
    Ctx extended(OpTerm arg, std::string name) const {
        Ctx c = *this;
        c.args.push_back(std::move(arg));
        c.names.push_back(std::move(name));
        return c;
    }
};

OpTerm compile(const Formula &f, const Ctx &ctx);

// {<b, a> | <a, b> in s} for s ⊆ A × B
OpTerm inverse(const OpTerm &s, const OpTerm &A, const OpTerm &B) {
    OpTerm y = app(OpCode::Acb, app(OpCode::Eq, A, A), B); // {<v, w, v>}
    return ran(app(OpCode::Inter, app(OpCode::Abc, s, A), pair2(y, y)));
}

OpTerm atom_positions(bool isIn, std::size_t i, std::size_t j, const Ctx &ctx) {
    const std::size_t n = ctx.n();
    auto a = [&](std::size_t k) { return ctx.args[k - 1]; };
    OpTerm t;
    std::size_t top;
    if (i == j) {
        OpTerm rel = isIn ? app(OpCode::In, a(i), a(i)) : app(OpCode::Eq, a(i), a(i));
        OpTerm diag = app(OpCode::Eq, a(i), a(i));
        t = dom(app(OpCode::Inter, rel, pair2(diag, diag))); // {x in a_i | x R x}
        if (i > 1) t = app(OpCode::Times, t, ctx.product(i - 1));
        top = i;
    } else {
        const std::size_t hi = std::max(i, j), lo = std::min(i, j);
        // t = {<x_hi, x_lo> | x_i R x_j}
        if (!isIn) t = app(OpCode::Eq, a(lo), a(hi));
        else if (i < j) t = app(OpCode::In, a(i), a(j));
        else t = inverse(app(OpCode::In, a(i), a(j)), a(j), a(i));
        if (lo > 1) t = app(OpCode::Abc, t, ctx.product(lo - 1));
        for (std::size_t m = lo + 1; m < hi; ++m) t = app(OpCode::Acb, t, a(m));
        top = hi;
    }
    for (std::size_t m = top + 1; m <= n; ++m) t = app(OpCode::Times, a(m), t);
    return t;
}

OpTerm compile_atom(const Formula &f, const Ctx &ctx) {
    const bool isIn = f->kind == FKind::In;
    if (!f->lhs.is_var() && !f->rhs.is_var()) {
        const bool truth = isIn ? f->rhs.value.contains(f->lhs.value) : f->lhs.value == f->rhs.value;
        OpTerm p = ctx.product(ctx.n());
        return truth ? p : app(OpCode::Diff, p, p);
    }
    // Constants become extra positions ranging over {c}, removed by ran.
    Ctx c = ctx;
    std::size_t extra = 0;
    auto pos = [&](const Term &t) {
        if (t.is_var()) return c.position(t.name);
        OpTerm k = const_term(t.value);
        c = c.extended(pair2(k, k), "");
        ++extra;
        return c.n();
    };
    const std::size_t i = pos(f->lhs);
    const std::size_t j = pos(f->rhs);
    OpTerm t = atom_positions(isIn, i, j, c);
    for (std::size_t e = 0; e < extra; ++e) t = ran(t);
    return t;
}

OpTerm compile_quant(const Formula &f, const Ctx &ctx) {
    const bool universal = f->kind == FKind::BForall;
    OpTerm b;
    Formula body = f->a;
    if (f->bound.is_var()) {
        // x_{n+1} ∈ x_j: range over ⋃ a_j and guard with the membership
        const std::size_t jpos = ctx.position(f->bound.name);
        b = big_union(ctx.args[jpos - 1]);
        Formula guard = f_in(Term::var(f->var), f->bound);
        body = universal ? f_imp(guard, body) : f_and(guard, body);
    } else {
        b = const_term(f->bound.value);
    }
    Ctx inner = ctx.extended(b, f->var);
    OpTerm fb = compile(body, inner);
    if (universal) return app(OpCode::Inter, ctx.product(ctx.n()), app(OpCode::Forall, fb, b));
    return ran(fb);
}

OpTerm compile(const Formula &f, const Ctx &ctx) {
    switch (f->kind) {
    case FKind::Falsum: {
        OpTerm p = ctx.product(ctx.n());
        return app(OpCode::Diff, p, p);
    }
    case FKind::Eq:
    case FKind::In: return compile_atom(f, ctx);
    case FKind::And: {
        OpTerm l = compile(f->a, ctx), r = compile(f->b, ctx);
        return app(OpCode::Inter, l, pair2(r, r));
    }
    case FKind::Or: {
        OpTerm l = compile(f->a, ctx), r = compile(f->b, ctx);
        return big_union(pair2(l, r));
    }
    case FKind::Imp: {
        OpTerm l = compile(f->a, ctx), r = compile(f->b, ctx);
        return app(OpCode::Imp, ctx.product(ctx.n()), kpair(l, r));
    }
    case FKind::BForall:
    case FKind::BExists: return compile_quant(f, ctx);
    default: break;
    }
    throw Error(ErrorKind::NotSigma0, "cannot compile '" + to_string(f) + "'");
}

void require_sigma0(const Formula &f, const std::vector<std::string> &vars) {
    if (classify(f) != Classification::Sigma0)
        throw Error(ErrorKind::NotSigma0, "'" + to_string(f) + "' is " + to_string(classify(f)));
    if (vars.empty()) throw Error(ErrorKind::InvalidArgument, "at least one variable is required");
    for (const auto &v : free_vars(f))
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            throw Error(ErrorKind::UnboundVariable, "free variable '" + v + "' is not in the variable list");
}

std::string fresh(const std::string &base, const std::vector<std::string> &taken) {
    std::string n = base;
    for (int k = 1; std::find(taken.begin(), taken.end(), n) != taken.end(); ++k) n = base + std::to_string(k);
    return n;
}

} // namespace

CompilationResult compile_comprehension(const Formula &f0, const std::vector<std::string> &vars) {
    const Formula f = normalize(f0);
    require_sigma0(f, vars);
    Ctx ctx;
    for (const auto &v : vars) ctx = ctx.extended(var_term(v), v);
    CompilationResult r;
    r.term = compile(f, ctx);
    r.var_order = vars;
    r.arguments = vars;
    r.stage_bound = term_depth(r.term) + 2;
    return r;
}

CompilationResult compile_separation(const Formula &f0, std::size_t i, const std::vector<std::string> &vars) {
    const Formula f = normalize(f0);
    require_sigma0(f, vars);
    if (i < 1 || i > vars.size()) throw Error(ErrorKind::InvalidArgument, "separation index out of range");
    std::vector<std::string> taken = vars;
    for (const auto &v : free_vars(f)) taken.push_back(v);
    const std::string domain = fresh("a", taken);
    Ctx ctx;
    CompilationResult r;
    r.arguments.push_back(domain);
    for (std::size_t k = 1; k <= vars.size(); ++k) {
        if (k == i) {
            ctx = ctx.extended(var_term(domain), vars[k - 1]);
        } else {
            OpTerm x = var_term(vars[k - 1]);
            ctx = ctx.extended(pair2(x, x), vars[k - 1]);
            r.arguments.push_back(vars[k - 1]);
        }
    }
    OpTerm t = compile(f, ctx);
    for (std::size_t k = 0; k < vars.size() - i; ++k) t = ran(t);
    if (i > 1) t = dom(t);
    r.term = t;
    r.var_order = vars;
    r.stage_bound = term_depth(t) + 2;
    return r;
}

std::size_t stage_bound(const Formula &f) {
    auto vars = free_vars(f);
    if (vars.empty()) vars.push_back("x");
    return compile_separation(f, 1, vars).stage_bound;
}

TermEnv comprehension_env(const CompilationResult &r, const std::vector<HFSet> &args) {
    if (args.size() != r.arguments.size())
        throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(r.arguments.size()) + " arguments");
    TermEnv env;
    for (std::size_t k = 0; k < args.size(); ++k) env[r.arguments[k]] = args[k];
    return env;
}

TermEnv separation_env(const CompilationResult &r, HFSet domain, const std::vector<HFSet> &others) {
    std::vector<HFSet> args{domain};
    args.insert(args.end(), others.begin(), others.end());
    return comprehension_env(r, args);
}

} // namespace hfl
