// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hfl/hfset.hpp"

namespace hfl {

// Index numerals of the special functions. Part of the wire format.
enum class Index : std::uint32_t {
    K = 1, S, P, P0, P1, SN, PN, DN, Zero, Omega, Pi, Nu, Gamma, Rho, I1, I2, I3, Pow
};
inline constexpr std::uint32_t kIndexCount = 18;

HFSet index_value(Index i);
const char *index_name(Index i);
std::optional<Index> index_from_name(std::string_view name);
std::optional<Index> index_from_value(HFSet x);
std::size_t index_arity(Index i);
nlohmann::json index_table_json();

struct Outcome {
    enum class Kind { Value, Timeout, NonFinitary, ApplyError };
    Kind kind = Kind::Value;
    HFSet value;              // Value only
    std::uint64_t spent = 0;  // fuel used
    std::string detail;       // ApplyError and depth Timeouts

    bool ok() const { return kind == Kind::Value; }
    friend bool operator==(const Outcome &, const Outcome &) = default;
};
const char *to_string(Outcome::Kind k);
std::string to_string(const Outcome &o);
nlohmann::json to_json(const Outcome &o);

// [e](x). Under-applied indices return the state <<..<e, x1>, ..>, xm> (left
// nested, so a state is decoded by peeling pairs down to the index numeral,
// which is never a pair). Every application costs one unit of fuel.
Outcome apply(HFSet e, HFSet x, std::uint64_t fuel, bool pmode = false);
// [e](x1, ..., xn) sharing one fuel budget.
Outcome apply_n(HFSet e, const std::vector<HFSet> &args, std::uint64_t fuel, bool pmode = false);

// Application terms.
struct WTermNode;
using WTerm = std::shared_ptr<const WTermNode>;
struct WTermNode {
    enum class Kind { Idx, Var, Const, App };
    Kind kind = Kind::Const;
    Index idx = Index::K;
    std::string var;
    HFSet value;
    WTerm f, a;
};
WTerm w_idx(Index i);
WTerm w_var(std::string name);
WTerm w_const(HFSet v);
WTerm w_app(WTerm f, WTerm a);
WTerm w_app(WTerm f, std::initializer_list<WTerm> args); // left associated

bool is_closed(const WTerm &t);
bool occurs(const WTerm &t, std::string_view var);
// S-expressions: (idx s), (var x), (const {..}), (app T T ...).
WTerm parse_wterm(std::string_view text);
std::string to_sexpr(const WTerm &t);

// Left-to-right evaluation with one shared fuel budget. InvalidArgument when
// the term has variables.
Outcome eval_closed_term(const WTerm &t, std::uint64_t fuel, bool pmode = false);

// Bracket abstraction: a variable-free term u with [u](v) ≃ t[var := v].
WTerm abstract(std::string_view var, const WTerm &t);
WTerm w_identity();   // s k k
WTerm w_divergent();  // (s i i)(s i i)

// Hand-written separation terms: [term](a, b) = {u ∈ b | φ(a, u)}.
struct SeparationEntry {
    std::string name;
    std::string formula; // free variables a and u
    WTerm term;
};
std::vector<SeparationEntry> separation_catalog();

} // namespace hfl
