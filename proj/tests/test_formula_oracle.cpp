// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "doctest.h"

#include "hfl/compiler.hpp"
#include "hfl/corpus.hpp"
#include "hfl/oracle.hpp"

using namespace hfl;

TEST_CASE("formulas parse and print stably") {
    for (const auto &text : sigma0_corpus()) {
        const Formula f = parse_formula(text);
        CHECK(same(parse_formula(to_string(f)), f));
        CHECK(classify(f) == Classification::Sigma0);
    }
    CHECK(classify(parse_formula("All x. x = x")) == Classification::ContainsUnbounded);
    CHECK(classify(parse_formula("all x sub y. x = x")) == Classification::Sigma0P);
}

TEST_CASE("syntax errors carry an offset") {
    try {
        parse_formula("x in & y");
        FAIL("no error");
    } catch (const SyntaxError &e) {
        CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(parse_formula("all x. x = x"), SyntaxError);
}

TEST_CASE("oracle truth") {
    Env e;
    e.assignment = {{"x", numeral(1)}, {"y", numeral(3)}};
    CHECK(eval_formula(parse_formula("x in y"), e));
    CHECK_FALSE(eval_formula(parse_formula("y in x"), e));
    CHECK(eval_formula(parse_formula("all z in x. z in y"), e));
    CHECK_FALSE(eval_formula(parse_formula("some z sub y. ~ z in y & z in 3"), e));
    CHECK(eval_formula(parse_formula("some z sub y. ~ z in y"), e));
    CHECK_THROWS_AS(eval_formula(parse_formula("w in y"), e), Error);
    CHECK_THROWS_AS(eval_formula(parse_formula("Some z. z in x"), e), Error);
    e.universe_bound = numeral(2);
    CHECK(eval_formula(parse_formula("Some z. z in x"), e));
}

TEST_CASE("comprehension") {
    const HFSet c = comprehension(parse_formula("x1 in x2"), {"x1", "x2"}, {numeral(3), numeral(2)});
    CHECK(c == HFSet::of({kuratowski_pair(numeral(1), numeral(0))}));
}

TEST_CASE("compiled terms agree with the oracle") {
    const auto pool = sets_with_small_closure(3);
    for (const auto &text : sigma0_corpus()) {
        const Formula f = parse_formula(text);
        const auto r = compile_comprehension(f, sigma0_vars());
        CHECK(uses_only_fundamental(r.term));
        for (std::size_t i = 0; i < pool.size(); i += 2) {
            const std::vector<HFSet> args{pool[i], pool[(i + 1) % pool.size()], pool[(i + 3) % pool.size()]};
            INFO(text);
            CHECK(eval_term(r.term, comprehension_env(r, args)) == comprehension(f, sigma0_vars(), args));
        }
    }
}

TEST_CASE("separation terms agree with the oracle") {
    const Formula f = parse_formula("some y in x2. x1 in y");
    const auto r = compile_separation(f, 1, {"x1", "x2"});
    const HFSet got = eval_term(r.term, separation_env(r, parse_set("{0,1,2}"), {parse_set("{{1},0}")}));
    CHECK(got == parse_set("{1}"));
}

TEST_CASE("compiler rejects unbounded formulas") {
    CHECK_THROWS_AS(compile_comprehension(parse_formula("All y. y = x1"), {"x1"}), Error);
}
