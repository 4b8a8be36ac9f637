// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "hfl/hfset.hpp"

namespace hfl {

enum class OpCode {
    Pair, Inter, Union, Diff, Times, Imp, Forall, Dom, Ran, Abc, Acb, Eq, In, // binary
    G0, G1, G2, G3,                                                          // ternary
};

inline constexpr std::array<OpCode, 13> kFundamentalOps = {
    OpCode::Pair, OpCode::Inter, OpCode::Union, OpCode::Diff, OpCode::Times, OpCode::Imp, OpCode::Forall,
    OpCode::Dom,  OpCode::Ran,   OpCode::Abc,   OpCode::Acb,  OpCode::Eq,    OpCode::In};
inline constexpr std::array<OpCode, 4> kAuxOps = {OpCode::G0, OpCode::G1, OpCode::G2, OpCode::G3};

inline constexpr int arity(OpCode c) { return c >= OpCode::G0 ? 3 : 2; }
const char *op_name(OpCode c);
OpCode op_from_name(std::string_view name); // InvalidArgument on unknown names

HFSet eval_fund(OpCode code, HFSet x, HFSet y);
HFSet eval_aux_g(OpCode code, HFSet x, HFSet y, HFSet z);

struct OpTermNode;
using OpTerm = std::shared_ptr<const OpTermNode>;

struct OpTermNode {
    enum class Kind { Var, Const, App2, App3 };
    Kind kind;
    std::string name; // Var
    HFSet value;      // Const
    OpCode code = OpCode::Pair;
    std::array<OpTerm, 3> args;
};

OpTerm var_term(std::string name);
OpTerm const_term(HFSet value);
OpTerm app(OpCode code, OpTerm x, OpTerm y);
OpTerm app(OpCode code, OpTerm x, OpTerm y, OpTerm z);

// The five-application expression of G1 in terms of the original operations.
OpTerm expand_g1(OpTerm x, OpTerm y);

using TermEnv = std::map<std::string, HFSet, std::less<>>;
// Shared subterms are evaluated once.
HFSet eval_term(const OpTerm &t, const TermEnv &env);

// Longest chain of operation applications.
std::size_t term_depth(const OpTerm &t);
// Number of distinct application nodes.
std::size_t term_size(const OpTerm &t);
bool uses_only_fundamental(const OpTerm &t);

std::string to_sexpr(const OpTerm &t);
OpTerm parse_term(std::string_view text);

} // namespace hfl
