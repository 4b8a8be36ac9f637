// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "doctest.h"

#include "hfl/erec.hpp"

using namespace hfl;

namespace {
HFSet idx(Index i) { return index_value(i); }
HFSet value(const Outcome &o) {
    REQUIRE(o.ok());
    return o.value;
}
} // namespace

TEST_CASE("index table") {
    CHECK(index_value(Index::K) == numeral(1));
    CHECK(index_value(Index::Pow) == numeral(18));
    for (std::uint32_t n = 1; n <= kIndexCount; ++n) {
        const auto i = index_from_value(numeral(n));
        REQUIRE(i.has_value());
        CHECK(index_from_name(index_name(*i)) == i);
    }
    CHECK_FALSE(index_from_value(numeral(19)).has_value());
}

TEST_CASE("combinators") {
    CHECK(value(apply_n(idx(Index::K), {numeral(2), numeral(5)}, 10)) == numeral(2));
    CHECK(value(apply(idx(Index::K), numeral(2), 10)) == kuratowski_pair(idx(Index::K), numeral(2)));
    CHECK(value(eval_closed_term(w_app(w_identity(), w_const(numeral(7))), 100)) == numeral(7));
}

TEST_CASE("arithmetic and pairing") {
    CHECK(value(apply(idx(Index::SN), numeral(3), 10)) == numeral(4));
    CHECK(value(apply(idx(Index::PN), numeral(3), 10)) == numeral(2));
    CHECK(value(apply(idx(Index::PN), numeral(0), 10)) == numeral(0));
    CHECK(value(apply_n(idx(Index::DN), {numeral(2), numeral(2), numeral(7), numeral(9)}, 10)) == numeral(7));
    CHECK(value(apply_n(idx(Index::DN), {numeral(2), numeral(3), numeral(7), numeral(9)}, 10)) == numeral(9));
    CHECK(apply_n(idx(Index::DN), {parse_set("{1}"), numeral(3), numeral(7), numeral(9)}, 10).kind ==
          Outcome::Kind::ApplyError);
    const HFSet p = value(apply_n(idx(Index::P), {numeral(1), numeral(2)}, 10));
    CHECK(value(apply(idx(Index::P0), p, 10)) == numeral(1));
    CHECK(value(apply(idx(Index::P1), p, 10)) == numeral(2));
}

TEST_CASE("set-theoretic indices") {
    CHECK(value(apply_n(idx(Index::Pi), {numeral(1), numeral(3)}, 10)) == parse_set("{1,3}"));
    CHECK(apply(idx(Index::Omega), numeral(0), 10).kind == Outcome::Kind::NonFinitary);
    CHECK(apply(idx(Index::Pow), numeral(2), 10).kind == Outcome::Kind::ApplyError);
    CHECK(value(apply(idx(Index::Pow), numeral(2), 10, true)) == powerset(numeral(2)));
}

TEST_CASE("divergence runs out of fuel") {
    for (std::uint64_t fuel : {10u, 1000u, 100000u}) {
        const Outcome o = eval_closed_term(w_divergent(), fuel);
        CHECK(o.kind == Outcome::Kind::Timeout);
        CHECK(o.spent <= fuel);
    }
}

TEST_CASE("fuel is monotone") {
    const WTerm t = w_app(w_identity(), w_app(w_identity(), w_const(numeral(3))));
    const Outcome full = eval_closed_term(t, 1000);
    REQUIRE(full.ok());
    for (std::uint64_t f = 1; f < 40; ++f) {
        const Outcome o = eval_closed_term(t, f);
        if (o.ok()) CHECK(o == full);
        else CHECK(f < full.spent);
    }
}

TEST_CASE("s-expressions round trip") {
    const WTerm t = parse_wterm("(app (idx s) (idx k) (idx k) (const {1,{2}}))");
    CHECK(to_sexpr(parse_wterm(to_sexpr(t))) == to_sexpr(t));
    CHECK(is_closed(t));
    CHECK_THROWS_AS(parse_wterm("(idx nope)"), SyntaxError);
    CHECK_THROWS_AS(eval_closed_term(w_var("x"), 10), Error);
}

TEST_CASE("bracket abstraction") {
    const WTerm body = w_app(w_idx(Index::Pi), {w_var("x"), w_const(numeral(0))});
    const WTerm u = abstract("x", body);
    CHECK_FALSE(occurs(u, "x"));
    CHECK(value(eval_closed_term(w_app(u, w_const(numeral(2))), 1000)) == parse_set("{2,0}"));
}

TEST_CASE("separation catalog") {
    const HFSet b = parse_set("{0,1,2,{1}}");
    for (const auto &e : separation_catalog()) {
        INFO(e.name);
        CHECK(eval_closed_term(w_app(e.term, {w_const(numeral(2)), w_const(b)}), 100000).ok());
    }
}
