// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hfl/hfset.hpp"

namespace hfl {

// A variable or an HF constant.
struct Term {
    enum class Kind { Var, Const };
    Kind kind = Kind::Var;
    std::string name;
    HFSet value;

    static Term var(std::string n) { return {Kind::Var, std::move(n), HFSet()}; }
    static Term constant(HFSet v) { return {Kind::Const, {}, v}; }
    bool is_var() const { return kind == Kind::Var; }
    friend bool operator==(const Term &a, const Term &b) {
        return a.kind == b.kind && (a.kind == Kind::Var ? a.name == b.name : a.value == b.value);
    }
};

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

enum class FKind { Falsum, Eq, In, And, Or, Imp, BForall, BExists, SubForall, SubExists, UForall, UExists };

struct FormulaNode {
    FKind kind = FKind::Falsum;
    Term lhs, rhs;   // atoms
    std::string var; // quantifiers
    Term bound;      // bounded quantifiers
    Formula a, b;    // a: left operand or quantifier body; b: right operand
    std::size_t pos = 0;
};

Formula f_false();
Formula f_eq(Term l, Term r);
Formula f_in(Term l, Term r);
Formula f_and(Formula a, Formula b);
Formula f_or(Formula a, Formula b);
Formula f_imp(Formula a, Formula b);
inline Formula f_not(Formula a) { return f_imp(std::move(a), f_false()); }
Formula f_quant(FKind kind, std::string var, Term bound, Formula body);
Formula f_uquant(FKind kind, std::string var, Formula body);

inline bool is_atom(FKind k) { return k == FKind::Eq || k == FKind::In; }
inline bool is_binary(FKind k) { return k == FKind::And || k == FKind::Or || k == FKind::Imp; }
inline bool is_bounded_quant(FKind k) {
    return k == FKind::BForall || k == FKind::BExists || k == FKind::SubForall || k == FKind::SubExists;
}
inline bool is_quant(FKind k) { return is_bounded_quant(k) || k == FKind::UForall || k == FKind::UExists; }
inline bool is_negation(const FormulaNode &f) { return f.kind == FKind::Imp && f.b->kind == FKind::Falsum; }

// Parses and renames bound variables that clash with free or enclosing bound
// variables.
Formula parse_formula(std::string_view text);
std::string to_string(const Formula &f);

enum class Classification { Sigma0, Sigma0P, ContainsUnbounded };
const char *to_string(Classification c);
Classification classify(const Formula &f);

// Unbounded quantifiers become bounded by `bound`.
Formula relativize(const Formula &f, const Term &bound);
std::vector<std::string> free_vars(const Formula &f);
Formula substitute(const Formula &f, const std::string &var, HFSet value);
// Renames bound variables apart from free and enclosing bound ones.
Formula normalize(const Formula &f);
// Nesting depth of connectives and quantifiers (atoms and false have depth 0).
std::size_t depth(const Formula &f);
// Structural equality, ignoring source positions.
bool same(const Formula &a, const Formula &b);

} // namespace hfl
