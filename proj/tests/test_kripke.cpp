// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "doctest.h"

#include <random>

#include "hfl/corpus.hpp"
#include "hfl/kripke.hpp"
#include "hfl/oracle.hpp"

using namespace hfl;

TEST_CASE("excluded middle fails at the root of the two-node model") {
    const KripkeModel m = excluded_middle_counterexample();
    REQUIRE(validate(m).valid);
    const Forcer f(m);
    const Formula lem = parse_formula("a = b | ~ a = b");
    CHECK_FALSE(f.forces(0, lem));
    CHECK(f.forces(1, lem));
    CHECK(f.forces(0, parse_formula("~~(a = b | ~ a = b)")));
}

TEST_CASE("single-node models agree with classical truth") {
    const HFSet u = parse_set("{0,{1},2}");
    const KripkeModel m = single_node_model(u);
    const Forcer f(m);
    Env e;
    e.universe_bound = transitive_closure(HFSet::of({u}));
    for (const char *text : {"Some y. all z in y. false", "All y. Some z. y in z", "all y in {1}. y in 2",
                             "Some y. Some z. y in z & z in y"}) {
        INFO(text);
        CHECK(f.forces(0, parse_formula(text)) == eval_formula(parse_formula(text), e));
    }
}

TEST_CASE("forcing persists along the order") {
    std::mt19937_64 rng(11);
    for (const Frame &fr : all_preorders(3)) {
        const KripkeModel m = monotone_model(fr, rng());
        const Forcer f(m);
        for (int i = 0; i < 10; ++i) {
            const Formula phi = random_kripke_formula(rng, 3);
            for (std::size_t p = 0; p < fr.size(); ++p)
                for (std::size_t q = 0; q < fr.size(); ++q)
                    if (fr.related(p, q) && f.forces(p, phi)) CHECK(f.forces(q, phi));
        }
    }
}

TEST_CASE("preorder enumeration") {
    CHECK(all_preorders(1).size() == 1);
    CHECK(all_preorders(2).size() == 4);
    CHECK(all_preorders(3).size() == 29);
}

TEST_CASE("invalid models are rejected") {
    KripkeModel m = excluded_middle_counterexample();
    m.frame.rel[1][1] = false;
    CHECK_FALSE(validate(m).valid);
    CHECK_THROWS_AS(Forcer{m}, Error);

    KripkeModel n = excluded_middle_counterexample();
    n.structures[0].member.insert({0, 1});
    CHECK_FALSE(validate(n).valid);
}

TEST_CASE("models round trip through JSON") {
    const KripkeModel m = excluded_middle_counterexample();
    CHECK(model_to_json(model_from_json(model_to_json(m))) == model_to_json(m));
    CHECK_THROWS_AS(model_from_json(nlohmann::json::parse(R"({"nodes": ["0"]})")), Error);
}
