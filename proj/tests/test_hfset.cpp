// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "doctest.h"

#include "hfl/hfset.hpp"

using namespace hfl;

TEST_CASE("sets are interned and extensional") {
    CHECK(HFSet::of({numeral(1), numeral(0)}) == HFSet::of({numeral(0), numeral(1), numeral(0)}));
    CHECK(numeral(2) == HFSet::of({numeral(0), numeral(1)}));
    CHECK(numeral(3).size() == 3);
    CHECK(numeral(3).rank() == 3);
    CHECK(HFSet().is_empty());
}

TEST_CASE("numerals and successor") {
    for (std::uint32_t n = 0; n < 10; ++n) {
        CHECK(as_numeral(numeral(n)) == n);
        CHECK(successor(numeral(n)) == numeral(n + 1));
        CHECK(is_ordinal(numeral(n)));
    }
    CHECK_FALSE(as_numeral(parse_set("{1}")).has_value());
    CHECK_FALSE(is_ordinal(parse_set("{1}")));
}

TEST_CASE("Kuratowski pairs") {
    const HFSet a = numeral(3), b = parse_set("{2}");
    const HFSet p = kuratowski_pair(a, b);
    REQUIRE(as_pair(p).has_value());
    CHECK(as_pair(p)->first == a);
    CHECK(as_pair(p)->second == b);
    CHECK(project(p, Side::First) == a);
    CHECK(kuratowski_pair(a, a) == HFSet::of({HFSet::of({a})}));
    CHECK_FALSE(is_pair(numeral(3)));
    CHECK_THROWS_AS(project(numeral(3), Side::Second), Error);
}

TEST_CASE("literal round trip") {
    for (HFSet x : sets_of_rank_below(4)) CHECK(parse_set(to_string(x)) == x);
    CHECK(to_string(numeral(2)) == "2");
    CHECK(to_string(kuratowski_pair(numeral(0), numeral(1))) == "<0,1>");
    CHECK(parse_set("<1,2>") == kuratowski_pair(numeral(1), numeral(2)));
    CHECK_THROWS_AS(parse_set("{1,"), SyntaxError);
    CHECK_THROWS_AS(parse_set("{1}}"), SyntaxError);
}

TEST_CASE("rank enumeration") {
    CHECK(sets_of_rank_below(0).size() == 0);
    CHECK(sets_of_rank_below(1).size() == 1);
    CHECK(sets_of_rank_below(2).size() == 2);
    CHECK(sets_of_rank_below(3).size() == 4);
    CHECK(sets_of_rank_below(4).size() == 16);
    const auto v = sets_of_rank_below(4);
    for (std::size_t i = 1; i < v.size(); ++i) CHECK(canonical_less(v[i - 1], v[i]));
}

TEST_CASE("set algebra") {
    const HFSet r = parse_set("{<0,1>,<2,3>}");
    CHECK(domain(r) == parse_set("{0,2}"));
    CHECK(range(r) == parse_set("{1,3}"));
    CHECK(image(r, numeral(2)) == parse_set("{3}"));
    CHECK(union_all(numeral(3)) == numeral(2));
    CHECK(set_difference(numeral(3), numeral(1)) == parse_set("{1,2}"));
    CHECK(product(numeral(2), numeral(1)).size() == 2);
    CHECK(powerset(numeral(3)).size() == 8);
    CHECK(transitive_closure(parse_set("{{2}}")) == parse_set("{{2},2,1,0}"));
    CHECK(is_subset(numeral(2), numeral(5)));
    CHECK(is_transitive(numeral(4)));
}
