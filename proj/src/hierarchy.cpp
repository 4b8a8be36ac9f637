// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "hfl/hierarchy.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "hfl/compiler.hpp"
#include "hfl/oracle.hpp"

namespace hfl {

namespace {

struct Memo {
    std::mutex mutex;
    std::unordered_map<HFSet, HFSet> closure; // b -> D(b)
    std::unordered_map<HFSet, HFSet> level;   // alpha -> L_alpha
    std::map<std::size_t, std::uint32_t> limit; // max_elements -> last enumerable stage
};

Memo &memo() {
    static Memo m;
    return m;
}

HFSet memo_closure(HFSet b, const Budget &budget) {
    {
        std::lock_guard lock(memo().mutex);
        if (auto it = memo().closure.find(b); it != memo().closure.end()) return it->second;
    }
    HFSet r = d_closure(b, budget);
    std::lock_guard lock(memo().mutex);
    memo().closure.emplace(b, r);
    return r;
}

} // namespace

HFSet ll_level(HFSet alpha, const Budget &budget) {
    {
        std::lock_guard lock(memo().mutex);
        if (auto it = memo().level.find(alpha); it != memo().level.end()) {
            // a stage cached under a larger budget still respects this one
            if (it->second.size() > budget.max_elements)
                throw Error(ErrorKind::StageTooLarge, "L stage has more than " +
                                                          std::to_string(budget.max_elements) + " elements");
            return it->second;
        }
    }
    HFSet acc;
    for (HFSet beta : alpha) {
        HFSet part = memo_closure(ll_level(beta, budget), budget);
        acc = set_union(acc, part);
        if (acc.size() > budget.max_elements)
            throw Error(ErrorKind::StageTooLarge, "L stage has more than " + std::to_string(budget.max_elements) +
                                                      " elements");
    }
    std::lock_guard lock(memo().mutex);
    memo().level.emplace(alpha, acc);
    return acc;
}

std::uint32_t ll_enumerable_limit(const Budget &budget) {
    {
        std::lock_guard lock(memo().mutex);
        if (auto it = memo().limit.find(budget.max_elements); it != memo().limit.end()) return it->second;
    }
    std::uint32_t n = 0;
    for (;; ++n) {
        try {
            ll_level(n + 1, budget);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::StageTooLarge) throw;
            break;
        }
    }
    std::lock_guard lock(memo().mutex);
    memo().limit[budget.max_elements] = n;
    return n;
}

std::optional<bool> ll_member(HFSet x, std::uint32_t m, const Budget &budget) {
    const std::uint32_t top = std::min(m, ll_enumerable_limit(budget));
    // L_j grows with j, so checking the largest enumerable stage suffices.
    const HFSet known = ll_level(top, budget);
    if (known.contains(x)) return true;
    if (top == m) return false;
    // L_{top+1} = L_top ∪ D(L_top) since the stages grow
    if (m == top + 1) return in_d_closure(x, known, budget);
    return std::nullopt;
}

WitnessChain ll_membership_witness(std::uint32_t n) {
    WitnessChain chain;
    chain.n = n;
    auto &s = chain.steps;
    auto base = [&](std::uint32_t k, std::uint32_t stage) {
        s.push_back({numeral(k), std::nullopt, 0, 0, stage, const_term(numeral(k))});
        return s.size() - 1;
    };
    auto step = [&](OpCode c, std::size_t l, std::size_t r) {
        const HFSet v = eval_fund(c, s[l].value, s[r].value);
        s.push_back({v, c, l, r, std::max(s[l].stage, s[r].stage) + 1, app(c, s[l].term, s[r].term)});
        return s.size() - 1;
    };
    // 0, 1, 2 and 3 sit in L_1, L_1, L_2 and L_3 (checked by enumeration)
    static constexpr std::uint32_t kBaseStage[] = {1, 1, 2, 3};
    if (n <= 3) {
        chain.target = base(n, kBaseStage[n]);
        return chain;
    }
    std::size_t cur = base(3, 3);
    std::size_t single = step(OpCode::Pair, cur, cur);
    for (std::uint32_t k = 3; k < n; ++k) {
        // k+1 = ⋃ pair(k, {k}); unary union costs a third stage per increment
        const std::size_t both = step(OpCode::Pair, cur, single);
        cur = step(OpCode::Union, both, both);
        if (k + 1 < n) single = step(OpCode::Pair, cur, cur);
    }
    chain.target = cur;
    return chain;
}

std::string verify_witness(const WitnessChain &chain, const Budget &budget) {
    const auto &s = chain.steps;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const WitnessStep &st = s[i];
        if (!st.code) {
            if (!ll_level(st.stage, budget).contains(st.value))
                return "base step " + std::to_string(i) + " not in its stage";
            continue;
        }
        if (st.lhs >= i || st.rhs >= i) return "step " + std::to_string(i) + " refers forward";
        const WitnessStep &a = s[st.lhs], &b = s[st.rhs];
        if (a.stage + 1 > st.stage || b.stage + 1 > st.stage)
            return "step " + std::to_string(i) + " claims a stage below its arguments";
        if (eval_fund(*st.code, a.value, b.value) != st.value)
            return "step " + std::to_string(i) + " does not evaluate to its value";
    }
    const WitnessStep &t = s.at(chain.target);
    if (t.value != numeral(chain.n)) return "target is not the numeral";
    if (t.stage > 2 * chain.n + 1)
        return "target lands in stage " + std::to_string(t.stage) + ", above " + std::to_string(2 * chain.n + 1);
    if (eval_term(t.term, {}) != t.value) return "target term does not evaluate to the numeral";
    return {};
}

std::vector<HFSet> def_iterates(HFSet b, std::uint32_t N, const Budget &budget) {
    std::vector<HFSet> out{b};
    for (std::uint32_t n = 0; n < N; ++n) {
        try {
            out.push_back(memo_closure(out.back(), budget));
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::StageTooLarge && e.kind() != ErrorKind::BudgetExceeded) throw;
            break;
        }
    }
    return out;
}

HFSet def_truncated(HFSet b, std::uint32_t N, const Budget &budget) {
    HFSet acc = b;
    for (std::uint32_t n = 0; n < N; ++n) {
        b = memo_closure(b, budget);
        acc = set_union(acc, b);
    }
    return acc;
}

namespace {

// φ(x) with x replaced by the variable y
Formula rename_free(const Formula &f, const std::string &x, const std::string &y) {
    auto t = [&](const Term &u) { return u.is_var() && u.name == x ? Term::var(y) : u; };
    switch (f->kind) {
    case FKind::Falsum: return f;
    case FKind::Eq: return f_eq(t(f->lhs), t(f->rhs));
    case FKind::In: return f_in(t(f->lhs), t(f->rhs));
    case FKind::And: return f_and(rename_free(f->a, x, y), rename_free(f->b, x, y));
    case FKind::Or: return f_or(rename_free(f->a, x, y), rename_free(f->b, x, y));
    case FKind::Imp: return f_imp(rename_free(f->a, x, y), rename_free(f->b, x, y));
    case FKind::UForall:
    case FKind::UExists:
        if (f->var == x) return f;
        return f_uquant(f->kind, f->var, rename_free(f->a, x, y));
    default:
        if (f->var == x) return f_quant(f->kind, f->var, t(f->bound), f->a);
        return f_quant(f->kind, f->var, t(f->bound), rename_free(f->a, x, y));
    }
}

} // namespace

DefSubsetsReport def_subsets(HFSet M, std::uint32_t max_depth, std::size_t max_formulas) {
    if (M.size() > 12) throw Error(ErrorKind::InvalidArgument, "def_subsets needs |M| <= 12");
    const std::vector<HFSet> elems(M.begin(), M.end());
    const std::size_t full = std::size_t{1} << elems.size();
    DefSubsetsReport rep;
    std::map<std::uint32_t, Formula> pool; // extension bitmask -> first formula found
    Env env;
    env.universe_bound = M;

    auto consider = [&](const Formula &f) {
        if (++rep.formulas_examined > max_formulas)
            throw Error(ErrorKind::BudgetExceeded, "def_subsets examined more than " + std::to_string(max_formulas) +
                                                       " formulas");
        std::uint32_t mask = 0;
        for (std::size_t k = 0; k < elems.size(); ++k) {
            env.assignment["x"] = elems[k];
            if (eval_formula(f, env)) mask |= 1u << k;
        }
        return pool.emplace(mask, f).second;
    };

    const Term x = Term::var("x");
    consider(f_false());
    consider(f_eq(x, x));
    consider(f_in(x, x));
    for (HFSet p : elems) {
        const Term c = Term::constant(p);
        consider(f_eq(x, c));
        consider(f_in(x, c));
        consider(f_in(c, x));
    }
    for (std::uint32_t d = 1; d <= max_depth && pool.size() < full; ++d) {
        const std::vector<Formula> prev = [&] {
            std::vector<Formula> v;
            for (const auto &kv : pool) v.push_back(kv.second);
            return v;
        }();
        bool grew = false;
        const std::string y = "y" + std::to_string(d);
        const Term yv = Term::var(y);
        for (const Formula &f : prev) {
            grew |= consider(f_not(f));
            const Formula fy = rename_free(f, "x", y);
            grew |= consider(f_uquant(FKind::UExists, y, f_and(f_in(yv, x), fy)));
            grew |= consider(f_uquant(FKind::UForall, y, f_imp(f_in(yv, x), fy)));
            grew |= consider(f_uquant(FKind::UExists, y, f_and(f_in(x, yv), fy)));
            for (const Formula &g : prev) {
                grew |= consider(f_and(f, g));
                grew |= consider(f_or(f, g));
                grew |= consider(f_imp(f, g));
            }
        }
        if (grew) rep.depth_used = d;
    }
    std::vector<HFSet> subs;
    for (const auto &kv : pool) {
        std::vector<HFSet> s;
        for (std::size_t k = 0; k < elems.size(); ++k)
            if (kv.first >> k & 1u) s.push_back(elems[k]);
        subs.push_back(HFSet::of(std::move(s)));
    }
    rep.subsets = HFSet::of(std::move(subs));
    return rep;
}

namespace {

HFSet ordinal_add_memo(HFSet x, HFSet gamma, std::unordered_map<HFSet, HFSet> &memo) {
    if (auto it = memo.find(gamma); it != memo.end()) return it->second;
    // x + γ = x ∪ {x + δ | δ ∈ γ}
    std::vector<HFSet> out(x.begin(), x.end());
    for (HFSet d : gamma) out.push_back(ordinal_add_memo(x, d, memo));
    HFSet r = HFSet::of(std::move(out));
    memo.emplace(gamma, r);
    return r;
}

} // namespace

HFSet ordinal_add(HFSet x, HFSet gamma) {
    std::unordered_map<HFSet, HFSet> memo;
    return ordinal_add_memo(x, gamma, memo);
}

HFSet hered_add_minus(HFSet alpha, HFSet gamma) {
    std::vector<HFSet> parts{singleton(alpha)};
    for (HFSet beta : alpha) parts.push_back(union_all(singleton(hered_add(beta, gamma))));
    return union_all(HFSet::of(std::move(parts)));
}

HFSet hered_add(HFSet alpha, HFSet gamma) { return ordinal_add(hered_add_minus(alpha, gamma), gamma); }

std::string alpha_star_formula_text() {
    // some p in x2 with p = <x1, d> for d = D(L_x1), and d ⊆ x3
    return "some p in x2. some u in p. some d in u. "
           "(all e in p. x1 in e & (all w in e. w = x1 | w = d)) & "
           "(some e in p. all w in e. w = x1) & (some e in p. d in e) & "
           "(all z in d. z in x3)";
}

std::uint32_t alpha_star_k() {
    return static_cast<std::uint32_t>(stage_bound(parse_formula(alpha_star_formula_text())));
}

AlphaStarReport alpha_star(HFSet alpha, const Budget &budget) {
    if (!is_ordinal(alpha)) throw Error(ErrorKind::InvalidArgument, "alpha_star needs an ordinal");
    AlphaStarReport rep;
    rep.alpha = alpha;
    rep.k = alpha_star_k();
    rep.domain_index = hered_add_minus(alpha, numeral(rep.k));
    const HFSet la = ll_level(alpha, budget);

    auto qualifies = [&](HFSet gamma) {
        const HFSet lg = ll_level(gamma, budget);
        if (!la.contains(lg)) return false; // L_gamma ∈ D(L_gamma)
        return is_subset(memo_closure(lg, budget), la);
    };
    // The candidates are ∈-hereditary: grow them through subsets of the
    // current set until nothing changes.
    std::vector<HFSet> cur;
    for (;;) {
        if (cur.size() > 16) throw Error(ErrorKind::BudgetExceeded, "alpha_star candidate set too large");
        std::vector<HFSet> next;
        for (HFSet gamma : powerset(HFSet::of(cur), 16))
            if (qualifies(gamma)) next.push_back(gamma);
        canonical_sort(next);
        if (next == cur) break;
        cur = std::move(next);
    }
    rep.candidates = cur;
    const std::uint32_t m = static_cast<std::uint32_t>(rep.domain_index.size());
    std::vector<HFSet> star;
    for (HFSet gamma : cur) {
        auto in = ll_member(gamma, m, budget);
        if (!in)
            throw Error(ErrorKind::StageTooLarge,
                        "membership of " + to_string(gamma) + " in L_" + std::to_string(m) + " is undecided");
        if (*in) star.push_back(gamma);
    }
    rep.alpha_star = HFSet::of(star);
    for (HFSet gamma : rep.alpha_star.elements())
        if (!is_ordinal(gamma)) rep.non_ordinals.push_back(gamma);
    canonical_sort(rep.non_ordinals);
    rep.stages_equal = ll_level(rep.alpha_star, budget) == la;
    return rep;
}

std::vector<HierarchyCheck> check_hierarchy_properties(std::uint32_t max_alpha, const Budget &budget) {
    std::vector<HierarchyCheck> out;
    const std::uint32_t limit = ll_enumerable_limit(budget);
    auto unchecked = [&](const char *prop, std::uint32_t a, std::string why) {
        out.push_back({prop, a, false, false, false, std::move(why)});
    };
    for (std::uint32_t a = 0; a <= max_alpha; ++a) {
        if (a > limit) {
            for (const char *p : {"member-monotone", "subset-monotone", "stage-member", "op-closure",
                                  "transitive-if-successor-closed"})
                unchecked(p, a, "L_" + std::to_string(a) + " is beyond the enumeration budget");
            continue;
        }
        const HFSet alpha = numeral(a);
        const HFSet la = ll_level(a, budget);
        {
            HierarchyCheck c{"member-monotone", a, true, true, false, ""};
            for (HFSet beta : alpha)
                if (!is_subset(ll_level(beta, budget), la)) {
                    c.holds = false;
                    c.detail = "L_beta not below L_alpha for beta = " + to_string(beta);
                }
            out.push_back(c);
        }
        {
            HierarchyCheck c{"subset-monotone", a, true, true, false, ""};
            std::size_t n = 0;
            for (HFSet beta : powerset(alpha, 16)) {
                ++n;
                if (!is_subset(ll_level(beta, budget), la)) {
                    c.holds = false;
                    c.detail = "L_beta not below L_alpha for beta = " + to_string(beta);
                }
            }
            if (c.holds) c.detail = std::to_string(n) + " subsets";
            out.push_back(c);
        }
        {
            HierarchyCheck c{"stage-member", a, true, true, false, ""};
            auto in = ll_member(la, a + 1, budget);
            c.holds = in.value_or(false);
            c.checked = in.has_value();
            c.detail = a + 1 <= limit ? "by enumeration of L_" + std::to_string(a + 1) : "by b ∈ D(b)";
            out.push_back(c);
        }
        if (a + 1 <= limit) {
            HierarchyCheck c{"op-closure", a, true, true, false, ""};
            c.holds = is_subset(d_small(la, budget), ll_level(a + 1, budget));
            c.detail = std::to_string(13 * la.size() * la.size()) + " applications";
            out.push_back(c);
        } else {
            std::ostringstream why;
            why << "needs " << 13.0 * double(la.size()) * double(la.size()) << " applications, budget "
                << budget.max_applications;
            unchecked("op-closure", a, why.str());
        }
        {
            bool hyp = true;
            for (HFSet beta : alpha)
                if (!alpha.contains(successor(beta))) hyp = false;
            HierarchyCheck c{"transitive-if-successor-closed", a, true, true, false, ""};
            if (hyp) {
                c.holds = is_transitive(la);
                c.detail = "hypothesis holds";
            } else {
                c.detail = "hypothesis fails, nothing to check";
            }
            out.push_back(c);
        }
        {
            HierarchyCheck c{"transitive", a, is_transitive(la), true, true, ""};
            if (!c.holds)
                for (HFSet x : la) {
                    for (HFSet y : x)
                        if (!la.contains(y)) {
                            c.detail = to_string(y) + " ∈ " + to_string(x) + " but not in the stage";
                            break;
                        }
                    if (!c.detail.empty()) break;
                }
            out.push_back(c);
        }
    }
    return out;
}

} // namespace hfl
