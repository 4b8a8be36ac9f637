// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "hfl/corpus.hpp"

namespace hfl {

const std::vector<std::string> &sigma0_corpus() {
    static const std::vector<std::string> corpus{
        "x1 = x1",
        "x1 in x2",
        "x2 in x1",
        "x1 = x2",
        "x1 in x1",
        "false",
        "~ x1 in x2",
        "x1 in x2 & x2 in x3",
        "x1 in x2 | x1 in x3",
        "x1 in x2 -> x1 in x3",
        "x1 = x2 | x2 in x1",
        "~(x1 = x2)",
        "x1 in x2 -> false",
        "all y in x1. y in x2",
        "all y in x1. y in x3",
        "all y in 3. y in x1",
        "all y in {1}. (y in x2 -> y in x3)",
        "some y in x1. y = x2",
        "some y in x2. (x1 in y & (all z in y. z in x1))",
        "some y in 2. y in x1",
        "x3 in x1 & x2 = x3",
        "x1 in {0,1}",
        "0 in x1",
        "x1 = 2",
        "all y in x1. all z in y. z in x1",
        "all y in x1. some z in x2. y in z",
        "some y in x1. all z in x2. ~ z = y",
        "all y in x2. (y in x1 | y = x1)",
        "~~ x1 in x2",
        "(x1 in x2 -> x2 in x3) -> x1 in x3",
        "x1 in x2 & ~ x2 in x1",
        "all y in x1. false",
        "some y in x1. y = y",
        "all y in x3. all z in x2. (y in z | z in y | y = z)",
        "some y in x1. some z in y. z in x2",
        "all y in x1. (y in x2 -> (some z in x3. y = z))",
        "x1 = x2 -> x2 = x1",
        "x2 in 3 & x1 in x2",
        "all y in {0,2}. (y in x1 | ~ y in x1)",
        "some y in 3. (y in x1 & ~ y in x2)",
        "all y in x1. (y = x2 -> x3 in y)",
        "(x1 in x3 | x2 in x3) & ~ x1 = x2",
        "all y in x1. (x2 in y -> x3 in y)",
        "(some y in x3. y = x1) & (some z in x3. z = x2)",
        "~(some y in x1. ~ y in x2)",
    };
    return corpus;
}

std::vector<HFSet> sets_with_small_closure(std::size_t n) {
    std::vector<HFSet> out;
    for (HFSet x : sets_of_rank_below(4))
        if (transitive_closure(x).size() <= n) out.push_back(x);
    return out;
}

HFSet random_small_set(std::mt19937_64 &rng, std::size_t max_trcl) {
    static const std::vector<HFSet> pool = sets_with_small_closure(4);
    for (;;) {
        std::vector<HFSet> elems;
        const std::size_t k = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
        for (std::size_t i = 0; i < k; ++i)
            elems.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
        HFSet x = HFSet::of(std::move(elems));
        if (transitive_closure(x).size() <= max_trcl) return x;
    }
}

std::vector<VmCase> vm_corpus() {
    auto i = [](Index k) { return w_idx(k); };
    auto c = [](HFSet x) { return w_const(x); };
    auto n = [](std::uint32_t k) { return numeral(k); };
    std::vector<VmCase> out{
        {"k", w_app(i(Index::K), {c(n(2)), c(n(5))})},
        {"k-partial", w_app(i(Index::K), {c(n(2))})},
        {"skk", w_app(w_identity(), {c(parse_set("{1,{2}}"))})},
        {"s-partial", w_app(i(Index::S), {i(Index::K), i(Index::K)})},
        {"pair", w_app(i(Index::P), {c(n(1)), c(n(2))})},
        {"p0", w_app(i(Index::P0), {w_app(i(Index::P), {c(n(1)), c(n(2))})})},
        {"p1", w_app(i(Index::P1), {w_app(i(Index::P), {c(n(1)), c(n(2))})})},
        {"p0-non-pair", w_app(i(Index::P0), {c(n(3))})},
        {"sN", w_app(i(Index::SN), {c(n(3))})},
        {"pN", w_app(i(Index::PN), {c(n(3))})},
        {"pN-zero", w_app(i(Index::PN), {c(n(0))})},
        {"dN-equal", w_app(i(Index::DN), {c(n(2)), c(n(2)), c(n(7)), c(n(9))})},
        {"dN-distinct", w_app(i(Index::DN), {c(n(2)), c(n(3)), c(n(7)), c(n(9))})},
        {"dN-non-numeral", w_app(i(Index::DN), {c(parse_set("{1}")), c(n(3)), c(n(7)), c(n(9))})},
        {"zero", w_app(i(Index::Zero), {c(n(4))})},
        {"omega", w_app(i(Index::Omega), {c(n(0))})},
        {"pi", w_app(i(Index::Pi), {c(n(1)), c(n(3))})},
        {"nu", w_app(i(Index::Nu), {c(parse_set("{2,{3}}"))})},
        {"gamma", w_app(i(Index::Gamma), {c(n(3)), c(parse_set("{2,{1,0}}"))})},
        {"rho-succ", w_app(i(Index::Rho), {i(Index::SN), c(n(2))})},
        {"rho-undefined", w_app(i(Index::Rho), {i(Index::P0), c(n(2))})},
        {"rho-identity", w_app(i(Index::Rho), {w_identity(), c(n(4))})},
        {"i1", w_app(i(Index::I1), {c(n(2)), c(n(0)), c(n(1))})},
        {"i2", w_app(i(Index::I2), {c(n(4)), c(n(3)), c(n(1))})},
        {"i3", w_app(i(Index::I3), {c(n(4)), c(n(3)), c(n(1))})},
        {"pbar-off", w_app(i(Index::Pow), {c(n(1))})},
        {"pbar-on", w_app(i(Index::Pow), {c(n(2))}), true},
        {"divergent", w_divergent()},
        {"nested-s", w_app(w_identity(), {w_app(w_identity(), {w_app(w_identity(), {c(n(1))})})})},
    };
    for (const auto &e : separation_catalog())
        out.push_back({"sep-" + e.name, w_app(e.term, {c(n(2)), c(parse_set("{0,1,2,{1}}"))})});
    return out;
}

namespace {

Formula gen(std::mt19937_64 &rng, std::size_t depth, std::vector<std::string> &vars, std::size_t &fresh) {
    auto pick = [&](std::size_t hi) { return std::uniform_int_distribution<std::size_t>(0, hi)(rng); };
    auto var = [&] { return Term::var(vars[pick(vars.size() - 1)]); };
    const std::size_t choice = depth == 0 ? pick(2) : pick(11);
    switch (choice) {
    case 0:
    case 1: return f_eq(var(), var());
    case 2: return pick(5) == 0 ? f_false() : f_in(var(), var());
    case 3:
    case 4:
    case 5:
    case 6: {
        // sequenced so that a seed gives the same formula on every compiler
        Formula l = gen(rng, depth - 1, vars, fresh);
        Formula r = gen(rng, depth - 1, vars, fresh);
        return choice == 3 ? f_and(l, r) : choice == 4 ? f_or(l, r) : f_imp(l, r);
    }
    case 7: return f_not(gen(rng, depth - 1, vars, fresh));
    default: {
        static constexpr FKind kinds[] = {FKind::BForall, FKind::BExists, FKind::UForall, FKind::UExists};
        const FKind k = kinds[choice - 8];
        const Term bound = var();
        const std::string v = "q" + std::to_string(fresh++);
        vars.push_back(v);
        Formula body = gen(rng, depth - 1, vars, fresh);
        vars.pop_back();
        if (k == FKind::UForall || k == FKind::UExists) return f_uquant(k, v, body);
        return f_quant(k, v, bound, body);
    }
    }
}

} // namespace

Formula random_kripke_formula(std::mt19937_64 &rng, std::size_t max_depth) {
    std::vector<std::string> vars{"a", "b"};
    std::size_t fresh = 0;
    return gen(rng, max_depth, vars, fresh);
}

} // namespace hfl
