// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "hfl/realize.hpp"

namespace hfl {

namespace {

using K = Verdict::Kind;

// Kleene conjunction: a refutation dominates, then the first Unknown.
Verdict meet(const Verdict &x, const Verdict &y) {
    if (x.is(K::NotRealized) || y.is(K::NotRealized)) return Verdict::not_realized();
    if (x.is(K::Unknown)) return x;
    return y;
}

struct Engine {
    Variant variant;
    const RealizeOptions &opts;

    bool pmode() const { return variant == Variant::WP; }

    // [a](c) ⊩ f
    Verdict applied(HFSet a, HFSet c, const Formula &f, const Env &env) const {
        const Outcome o = apply(a, c, opts.fuel, pmode());
        switch (o.kind) {
        case Outcome::Kind::Value: return run(o.value, f, env);
        case Outcome::Kind::Timeout: return Verdict::unknown("fuel");
        default: return Verdict::not_realized(); // undefined
        }
    }

    static Env bind(const Env &env, const std::string &var, HFSet c) {
        Env e = env;
        e.assignment[var] = c;
        return e;
    }

    Verdict run(HFSet a, const Formula &f, const Env &env) const {
        switch (f->kind) {
        case FKind::Falsum: return Verdict::not_realized();
        case FKind::Eq:
        case FKind::In: return eval_formula(f, env) ? Verdict::realized() : Verdict::not_realized();
        case FKind::And: {
            auto pr = as_pair(a);
            if (!pr) return Verdict::not_realized();
            const Verdict l = run(pr->first, f->a, env);
            if (l.is(K::NotRealized)) return l;
            return meet(l, run(pr->second, f->b, env));
        }
        case FKind::Or: {
            if (a.is_empty()) return Verdict::not_realized();
            Verdict acc;
            for (HFSet d : canonical_elements(a)) {
                auto pr = as_pair(d);
                Verdict v = Verdict::not_realized();
                if (pr && pr->first == numeral(0)) v = run(pr->second, f->a, env);
                else if (pr && pr->first == numeral(1)) v = run(pr->second, f->b, env);
                acc = meet(acc, v);
                if (acc.is(K::NotRealized)) break;
            }
            return acc;
        }
        case FKind::Imp: return implication(a, f, env);
        case FKind::BForall:
        case FKind::SubForall: {
            const HFSet b = term_value(f->bound, env);
            std::vector<HFSet> dom;
            if (f->kind == FKind::BForall) {
                dom = canonical_elements(b);
            } else {
                try {
                    dom = canonical_elements(powerset(b));
                } catch (const Error &) {
                    return Verdict::unknown("search-bound");
                }
            }
            Verdict acc;
            for (HFSet c : dom) {
                acc = meet(acc, applied(a, c, f->a, bind(env, f->var, c)));
                if (acc.is(K::NotRealized)) break;
            }
            return acc;
        }
        case FKind::UForall: {
            Verdict acc;
            for (HFSet c : opts.search) {
                acc = meet(acc, applied(a, c, f->a, bind(env, f->var, c)));
                if (acc.is(K::NotRealized)) return acc;
            }
            return acc.is(K::Realized) ? Verdict::unknown("search-bound") : acc;
        }
        case FKind::BExists:
        case FKind::SubExists:
        case FKind::UExists: {
            if (a.is_empty()) return Verdict::not_realized();
            const std::optional<HFSet> b =
                f->kind == FKind::UExists ? std::nullopt : std::optional<HFSet>(term_value(f->bound, env));
            Verdict acc;
            for (HFSet d : canonical_elements(a)) {
                auto pr = as_pair(d);
                if (!pr) return Verdict::not_realized();
                if (f->kind == FKind::BExists && !b->contains(pr->first)) return Verdict::not_realized();
                if (f->kind == FKind::SubExists && !is_subset(pr->first, *b)) return Verdict::not_realized();
                acc = meet(acc, run(pr->second, f->a, bind(env, f->var, pr->first)));
                if (acc.is(K::NotRealized)) break;
            }
            return acc;
        }
        }
        return Verdict::not_realized();
    }

    Verdict implication(HFSet a, const Formula &f, const Env &env) const {
        Verdict truth;
        if (variant != Variant::W) {
            if (classify(f) == Classification::ContainsUnbounded) truth = Verdict::unknown("search-bound");
            else if (!eval_formula(f, env)) return Verdict::not_realized();
        }
        // A false atom or false has no realizers: the ∀c part holds vacuously.
        const FKind ant = f->a->kind;
        if (ant == FKind::Falsum || (is_atom(ant) && !eval_formula(f->a, env))) return truth;

        // Constant realizer: [a](c) = r for every c.
        if (auto pr = as_pair(a); pr && pr->first == index_value(Index::K)) {
            const Verdict r = run(pr->second, f->b, env);
            if (!r.is(K::NotRealized)) return meet(truth, r);
            for (HFSet c : opts.search)
                if (run(c, f->a, env).is(K::Realized)) return Verdict::not_realized();
            return meet(truth, Verdict::unknown("search-bound"));
        }

        Verdict acc = truth;
        for (HFSet c : opts.search) {
            const Verdict vc = run(c, f->a, env);
            if (vc.is(K::NotRealized)) continue;
            const Verdict out = applied(a, c, f->b, env);
            if (vc.is(K::Realized) && out.is(K::NotRealized)) return Verdict::not_realized();
            if (!out.is(K::Realized)) acc = meet(acc, out.is(K::Unknown) ? out : vc);
            else acc = meet(acc, vc);
        }
        return meet(acc, Verdict::unknown("search-bound"));
    }
};

} // namespace

const char *to_string(Variant v) {
    switch (v) {
    case Variant::WT: return "wt";
    case Variant::W: return "w";
    case Variant::WP: return "wp";
    }
    return "?";
}

Variant variant_from_name(std::string_view name) {
    if (name == "wt") return Variant::WT;
    if (name == "w") return Variant::W;
    if (name == "wp") return Variant::WP;
    throw Error(ErrorKind::InvalidArgument, "unknown variant '" + std::string(name) + "'");
}

const char *to_string(Verdict::Kind k) {
    switch (k) {
    case K::Realized: return "Realized";
    case K::NotRealized: return "NotRealized";
    case K::Unknown: return "Unknown";
    }
    return "?";
}

std::string to_string(const Verdict &v) {
    std::string s = to_string(v.kind);
    if (v.is(K::Unknown)) s += "(" + v.reason + ")";
    return s;
}

Verdict check(Variant v, HFSet a, const Formula &f, const Env &env, const RealizeOptions &opts) {
    return Engine{v, opts}.run(a, f, env);
}

HFSet constant_realizer(HFSet r) { return kuratowski_pair(index_value(Index::K), r); }

AuditReport truth_audit(const std::vector<RealizeTriple> &corpus, const Checker &checker) {
    AuditReport rep;
    for (const auto &t : corpus) {
        if (classify(t.formula) == Classification::ContainsUnbounded)
            throw Error(ErrorKind::InvalidArgument, "audit formula '" + to_string(t.formula) + "' is unbounded");
        AuditEntry e{t, checker(t), eval_formula(t.formula, t.env), false};
        e.violation = e.verdict.is(K::Realized) && !e.truth;
        rep.violations += e.violation;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

AuditReport truth_audit(const std::vector<RealizeTriple> &corpus, Variant v, const RealizeOptions &opts) {
    return truth_audit(corpus, [&](const RealizeTriple &t) { return check(v, t.realizer, t.formula, t.env, opts); });
}

nlohmann::json to_json(const AuditReport &r) {
    nlohmann::json j;
    j["violations"] = r.violations;
    j["pass"] = r.pass();
    j["search"] = "bounded search surrogate for the quantifiers over all sets";
    j["entries"] = nlohmann::json::array();
    for (const auto &e : r.entries)
        j["entries"].push_back({{"label", e.triple.label},
                                {"realizer", to_string(e.triple.realizer)},
                                {"formula", to_string(e.triple.formula)},
                                {"verdict", to_string(e.verdict)},
                                {"truth", e.truth},
                                {"violation", e.violation}});
    return j;
}

std::vector<RealizeTriple> stock_realizability_corpus() {
    auto n = [](std::uint32_t k) { return numeral(k); };
    auto pr = [](HFSet x, HFSet y) { return kuratowski_pair(x, y); };
    auto fam = [](std::initializer_list<HFSet> xs) { return HFSet::of(xs); };
    const HFSet id = eval_closed_term(w_identity(), 10).value;
    // c |-> {<c + 1, 0>}
    const WTerm c = w_var("c");
    const WTerm step = w_app(w_idx(Index::P), {w_app(w_idx(Index::SN), {c}), w_const(n(0))});
    const HFSet up = eval_closed_term(abstract("c", w_app(w_idx(Index::Pi), {step, step})), 100).value;
    const HFSet k0 = constant_realizer(n(0));

    std::vector<RealizeTriple> out;
    auto add = [&](std::string label, HFSet a, std::string_view text, Env env = {}) {
        out.push_back({std::move(label), a, parse_formula(text), std::move(env)});
    };
    add("atom-true", n(0), "0 in 1");
    add("atom-false", n(0), "1 in 0");
    add("eq-true", n(5), "0 = 0");
    add("and", pr(n(0), n(0)), "0 in 1 & 1 in 2");
    add("and-false-right", pr(n(0), n(0)), "0 in 1 & 1 in 1");
    add("and-non-pair", n(3), "0 in 1 & 0 in 2");
    add("or-left", fam({pr(n(0), n(0))}), "0 in 1 | 1 in 0");
    add("or-right", fam({pr(n(1), n(0))}), "1 in 0 | 0 in 1");
    add("or-wrong-tag", fam({pr(n(0), n(0))}), "1 in 0 | 0 in 1");
    add("or-empty-family", n(0), "0 in 1 | 0 in 2");
    add("or-both-false", fam({pr(n(0), n(0))}), "0 in 0 | 1 in 1");
    add("or-mixed-family", fam({pr(n(0), n(0)), pr(n(1), n(0))}), "0 in 1 | 0 in 2");
    add("bexists", fam({pr(n(1), n(0))}), "some x in 2. x = 1");
    add("bexists-wrong-witness", fam({pr(n(1), n(0))}), "some x in 2. x = 2");
    add("bexists-outside-bound", fam({pr(n(2), n(0))}), "some x in 2. x = 2");
    add("bexists-singleton", fam({pr(n(0), n(0))}), "some x in 1. x = x");
    add("bexists-empty-family", n(0), "some x in 1. x = x");
    add("bforall-constant", k0, "all x in 2. x in 3");
    add("bforall-constant-false", k0, "all x in 3. x in 2");
    add("bforall-identity", id, "all x in 2. x in 2");
    add("bforall-empty-bound", n(0), "all x in 0. false");
    add("imp-constant", k0, "0 in 1 -> 0 in 2");
    add("imp-false-conclusion", k0, "0 in 1 -> 1 in 0");
    add("imp-false-antecedent", n(0), "1 in 0 -> false");
    add("imp-from-false", n(7), "false -> 0 in 0");
    add("negation-of-truth", k0, "~ 0 in 1");
    add("bforall-imp", constant_realizer(k0), "all x in 2. x in 2 -> x in 3");
    add("subforall", k0, "all x sub 1. x in 2");
    add("subforall-false", k0, "all x sub 2. x in 3");
    add("subexists", fam({pr(n(1), n(0))}), "some x sub 2. x = 1");
    add("nested-exists", fam({pr(n(2), fam({pr(n(1), n(0))}))}), "some x in 3. some y in x. y = 1");
    add("and-of-quantifiers", pr(fam({pr(n(0), n(0))}), k0), "(some x in 2. x = 0) & (all y in 1. y = 0)");
    add("forall-exists-computed", up, "all x in 2. some y in 3. x in y");
    add("forall-exists-constant", constant_realizer(fam({pr(n(2), n(0))})), "all x in 2. some y in 3. x in y");
    add("forall-exists-constant-false", constant_realizer(fam({pr(n(2), n(0))})), "all x in 3. some y in 3. x in y");
    add("env-atom", n(0), "u in v", Env{{{"u", n(1)}, {"v", n(2)}}, std::nullopt});
    add("env-bexists", fam({pr(n(1), n(0))}), "some x in v. x = u", Env{{{"u", n(1)}, {"v", n(2)}}, std::nullopt});
    add("powerset-index", index_value(Index::Pow), "all y sub 2. y = y");
    add("apply-error", n(0), "all x in 1. x = x");
    return out;
}

} // namespace hfl
