// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "doctest.h"

#include <random>

#include "hfl/corpus.hpp"
#include "hfl/hierarchy.hpp"
#include "hfl/ops.hpp"

using namespace hfl;

TEST_CASE("fundamental operations on small arguments") {
    const HFSet x = numeral(2), y = numeral(3);
    CHECK(eval_fund(OpCode::Pair, x, y) == HFSet::of({x, y}));
    CHECK(eval_fund(OpCode::Diff, y, x) == HFSet::of({numeral(2)}));
    CHECK(eval_fund(OpCode::Times, numeral(1), numeral(1)) == HFSet::of({kuratowski_pair(numeral(0), numeral(0))}));
}

TEST_CASE("operation terms parse, print and evaluate") {
    const OpTerm t = parse_term("(pair (var a) (const {1}))");
    CHECK(to_sexpr(parse_term(to_sexpr(t))) == to_sexpr(t));
    CHECK(eval_term(t, {{"a", numeral(0)}}) == parse_set("{0,{1}}"));
    CHECK(term_depth(t) == 1);
    CHECK(uses_only_fundamental(t));
    CHECK_THROWS_AS(parse_term("(pair (var a))"), Error);
    CHECK_THROWS_AS(eval_term(t, {}), Error);
}

TEST_CASE("parallel and serial one-step closures agree") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 12; ++i) {
        std::vector<HFSet> elems;
        for (int k = 0; k < 4; ++k) elems.push_back(random_small_set(rng, 4));
        const HFSet b = HFSet::of(elems);
        CHECK(d_small(b) == d_small_serial(b));
    }
    CHECK(d_small(numeral(4)) == d_small_serial(numeral(4)));
}

TEST_CASE("closure contains its base and is monotone") {
    const HFSet b = parse_set("{0,{1}}");
    const HFSet d = d_small(b);
    CHECK(is_subset(b, d));
    CHECK(is_subset(d, d_small(set_union(b, numeral(2)))));
}

TEST_CASE("early levels of the hierarchy") {
    CHECK(ll_level(0u).size() == 0);
    CHECK(ll_level(1u) == numeral(2));
    CHECK(ll_level(2u).size() == 13);
    CHECK(ll_level(3u).size() == 479);
    for (std::uint32_t a = 0; a < 3; ++a) {
        CHECK(is_transitive(ll_level(a + 1)) == (a == 0));
        CHECK(is_subset(ll_level(a), ll_level(a + 1)));
    }
}

TEST_CASE("stage budget is enforced") {
    Budget tiny;
    tiny.max_elements = 100;
    CHECK_THROWS_AS(ll_level(4u, tiny), Error);
}
