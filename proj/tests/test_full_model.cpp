// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "doctest.h"

#include "hfl/full_model.hpp"

using namespace hfl;

TEST_CASE("universe sizes on the two-node chain") {
    FullModel m(two_node_chain());
    CHECK(m.universe(0, 2).size() == 3);
    CHECK(m.universe(1, 2).size() == 2);
    CHECK(m.universe(0, 3).size() == 15);
    CHECK(m.universe(1, 3).size() == 4);
}

TEST_CASE("names are coherent and restrict consistently") {
    FullModel m(two_node_chain());
    for (NameId g : m.universe(0, 3)) {
        CHECK(m.coherent(g));
        const NameId r = m.restrict(g, 1);
        CHECK(m.base(r) == 1);
        CHECK(m.at(r, 1) == m.at(g, 1));
    }
    CHECK_THROWS_AS(m.at(m.canonical(numeral(1), 1), 0), Error);
}

TEST_CASE("1_p is an ordinal below 1") {
    FullModel m(two_node_chain());
    const NameId one = m.canonical(numeral(1), 0);
    const NameId op = m.one_p(1);
    CHECK(m.forces(0, parse_formula("all z in x. z in y"), {{"x", op}, {"y", one}}, 3));
    CHECK_FALSE(m.forces(0, parse_formula("x = y"), {{"x", op}, {"y", one}}, 3));
    CHECK(m.forces(1, parse_formula("x = y"), {{"x", op}, {"y", one}}, 3));
}

TEST_CASE("delta codes round trip") {
    FullModel m(two_node_chain());
    const NameId alpha = m.one_p(1);
    for (unsigned mask = 0; mask < 8; ++mask) {
        const std::vector<bool> bits{bool(mask & 1), bool(mask & 2), bool(mask & 4)};
        CHECK(delta_decode(m, delta_encode(m, bits, alpha), alpha, 3) == bits);
    }
}

TEST_CASE("frames that are not preorders are rejected") {
    Frame f = two_node_chain();
    f.rel[0][0] = false;
    CHECK_THROWS_AS(FullModel{f}, Error);
}
