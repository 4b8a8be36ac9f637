// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "doctest.h"

#include "hfl/hierarchy.hpp"

using namespace hfl;

TEST_CASE("membership witnesses stay within 2n+1 for small n") {
    for (std::uint32_t n = 0; n <= 7; ++n) {
        const WitnessChain w = ll_membership_witness(n);
        CHECK(w.steps[w.target].value == numeral(n));
        CHECK(w.steps[w.target].stage <= 2 * n + 1);
        CHECK(verify_witness(w) == "");
    }
}

TEST_CASE("witness for n = 8 overshoots the bound") {
    const WitnessChain w = ll_membership_witness(8);
    CHECK(w.steps[w.target].value == numeral(8));
    CHECK(w.steps[w.target].stage == 18);
}

TEST_CASE("alpha star for small ordinals") {
    for (std::uint32_t a = 0; a <= 2; ++a) {
        const AlphaStarReport r = alpha_star(numeral(a));
        CHECK(r.stages_equal);
        CHECK(r.non_ordinals.empty());
    }
}

TEST_CASE("definable-closure iterates grow from the base") {
    const HFSet b = parse_set("{1,2}");
    const auto it = def_iterates(b, 1);
    REQUIRE(it.size() == 2);
    CHECK(it[0] == b);
    CHECK(is_subset(it[0], it[1]));
    CHECK(it[1].size() == 24);
}

TEST_CASE("definable subsets of a small set are all of its subsets") {
    const HFSet m = numeral(2);
    CHECK(def_subsets(m).subsets == powerset(m));
}

TEST_CASE("hierarchy properties hold up to stage 3") {
    for (const auto &c : check_hierarchy_properties(3)) {
        INFO(c.property << ": " << c.detail);
        if (c.checked && !c.informational) CHECK(c.holds);
    }
}
