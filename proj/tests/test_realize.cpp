// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "doctest.h"

#include "hfl/realize.hpp"

using namespace hfl;

namespace {
Env env(std::initializer_list<std::pair<const std::string, HFSet>> xs) {
    Env e;
    for (const auto &[k, v] : xs) e.assignment[k] = v;
    return e;
}
} // namespace

TEST_CASE("atoms are realized exactly when true") {
    const Env e = env({{"x", numeral(1)}, {"y", numeral(3)}});
    CHECK(check_wt(numeral(0), parse_formula("x in y"), e).is(Verdict::Kind::Realized));
    CHECK(check_wt(numeral(0), parse_formula("y in x"), e).is(Verdict::Kind::NotRealized));
    CHECK(check_wt(numeral(0), parse_formula("x = x"), e).is(Verdict::Kind::Realized));
}

TEST_CASE("conjunction needs a pair") {
    const Env e = env({{"x", numeral(1)}, {"y", numeral(3)}});
    const Formula f = parse_formula("x in y & x = x");
    CHECK(check_wt(kuratowski_pair(numeral(0), numeral(0)), f, e).is(Verdict::Kind::Realized));
    CHECK(check_wt(numeral(3), f, e).is(Verdict::Kind::NotRealized));
}

TEST_CASE("constant realizers realize implications with true consequents") {
    const Env e = env({{"x", numeral(1)}, {"y", numeral(3)}});
    const HFSet a = constant_realizer(numeral(0));
    CHECK(check_wt(a, parse_formula("y in x -> x in y"), e).is(Verdict::Kind::Realized));
    CHECK(check_w(a, parse_formula("x in y -> x in y"), e).is(Verdict::Kind::Realized));
}

TEST_CASE("running out of fuel gives unknown") {
    const Env e = env({{"x", numeral(1)}});
    RealizeOptions o;
    o.fuel = 0;
    // s k k as a state: application costs fuel, unlike the constant shortcut
    const HFSet skk = kuratowski_pair(kuratowski_pair(index_value(Index::S), index_value(Index::K)),
                                      index_value(Index::K));
    const Verdict v = check_wt(skk, parse_formula("x = x -> x = x"), e, o);
    CHECK(v.is(Verdict::Kind::Unknown));
    CHECK(v.reason == "fuel");
}

TEST_CASE("unbounded quantifiers are at best unknown") {
    const Env e = env({});
    const Verdict v = check_wt(constant_realizer(numeral(0)), parse_formula("All y. y = y"), e);
    CHECK(v.is(Verdict::Kind::Unknown));
    CHECK(v.reason == "search-bound");
}

TEST_CASE("truth audit of the stock corpus") {
    for (Variant v : {Variant::WT, Variant::W, Variant::WP}) {
        const AuditReport r = truth_audit(stock_realizability_corpus(), v);
        CHECK(r.pass());
        CHECK(r.entries.size() == stock_realizability_corpus().size());
    }
}

TEST_CASE("variant names") {
    CHECK(variant_from_name("wt") == Variant::WT);
    CHECK(variant_from_name("wp") == Variant::WP);
    CHECK_THROWS_AS(variant_from_name("x"), Error);
}
