// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hfl/hfset.hpp"
#include "hfl/ops.hpp"

namespace hfl {

struct Budget {
    std::size_t max_elements = 2'000'000;       // size of any produced stage
    std::size_t max_applications = 60'000'000;  // 13 * |b|^2 for one closure step
    std::size_t max_result_size = 500'000;      // elements of a single operation result
};

// b plus every fundamental operation applied to every ordered pair from b.
// The parallel version splits the (x, y) grid across OpenMP threads; the serial
// one is the reference used by the tests and the benchmark.
HFSet d_small(HFSet b, const Budget &budget = {});
HFSet d_small_serial(HFSet b, const Budget &budget = {});
// Same, additionally closing under G0..G3 on all triples from b.
HFSet d_small_extended(HFSet b, const Budget &budget = {});
// d_small(b ∪ {b})
HFSet d_closure(HFSet b, const Budget &budget = {});

// One operation application producing a set from two members of a base.
struct Generator {
    OpCode code;
    HFSet lhs, rhs;
};
// Some x, y ∈ b and fundamental operation F with F(x, y) = target, found by
// inverting each operation instead of enumerating d_small(b). The result is
// re-evaluated before it is returned. BudgetExceeded when the search work
// passes budget.max_applications.
std::optional<Generator> find_generator(HFSet target, HFSet b, const Budget &budget = {});
bool in_d_small(HFSet target, HFSet b, const Budget &budget = {});
bool in_d_closure(HFSet target, HFSet b, const Budget &budget = {});

// L_alpha = union of d_closure(L_beta) over beta in alpha. Defined for every HF
// alpha by ∈-recursion and memoized. StageTooLarge past the budget.
HFSet ll_level(HFSet alpha, const Budget &budget = {});
inline HFSet ll_level(std::uint32_t n, const Budget &budget = {}) { return ll_level(numeral(n), budget); }
// Largest n with L_n enumerable under the budget (cached after the first call).
std::uint32_t ll_enumerable_limit(const Budget &budget = {});

// Is x ∈ L_m? Answers from enumerated stages, using L_j ⊆ L_m for j <= m.
// One stage past the enumerable limit is decided with in_d_closure. Returns
// nullopt when m is further out and x was not found below.
std::optional<bool> ll_member(HFSet x, std::uint32_t m, const Budget &budget = {});

// A step of a membership witness chain: value = code(args) lands in `stage`
// because both arguments are in stage - 1. Base steps (no code) are checked by
// enumerating L_stage.
struct WitnessStep {
    HFSet value;
    std::optional<OpCode> code;
    std::size_t lhs = 0, rhs = 0; // indices of earlier steps
    std::uint32_t stage = 0;
    OpTerm term;
};
struct WitnessChain {
    std::uint32_t n = 0;
    std::vector<WitnessStep> steps;
    std::size_t target = 0; // index of the step whose value is n
};
// Membership chain for n: numerals up to 3 are base facts at their least
// stage; above that each increment is pair(k, {k}), then ⋃, then {k+1}, three
// stages per increment because union is unary. The target stage is 3n - 6 for
// n > 3, which meets 2n + 1 only up to n = 7.
WitnessChain ll_membership_witness(std::uint32_t n);
// Re-evaluates every step, checks stage arithmetic, base facts by enumeration
// and the term of the target. Empty string when valid, else the first problem.
std::string verify_witness(const WitnessChain &chain, const Budget &budget = {});

// ⋃_{n <= N} D^n(b)
HFSet def_truncated(HFSet b, std::uint32_t N, const Budget &budget = {});
// The stages D^0(b), ..., D^N(b), stopping early on budget exhaustion (the
// returned vector is then shorter than N + 1).
std::vector<HFSet> def_iterates(HFSet b, std::uint32_t N, const Budget &budget = {});

// Subsets of M definable over <M, ∈> with parameters from M by formulas of at
// most `depth` connectives/quantifiers, deduplicated by extension.
struct DefSubsetsReport {
    HFSet subsets;
    std::uint32_t depth_used = 0;
    std::size_t formulas_examined = 0;
};
DefSubsetsReport def_subsets(HFSet M, std::uint32_t max_depth = 3, std::size_t max_formulas = 2'000'000);

// alpha +_H gamma and the "minus" variant.
HFSet hered_add(HFSet alpha, HFSet gamma);
HFSet hered_add_minus(HFSet alpha, HFSet gamma);
// x + gamma, ordinal addition by set recursion on gamma
HFSet ordinal_add(HFSet x, HFSet gamma);

struct AlphaStarReport {
    HFSet alpha;
    HFSet alpha_star;
    std::uint32_t k = 0;
    HFSet domain_index;             // (alpha +_H k)^-
    std::vector<HFSet> candidates;  // {gamma | D(L_gamma) ⊆ L_alpha}
    std::vector<HFSet> non_ordinals; // members of alpha_star that are not ordinals
    bool stages_equal = false;      // L_{alpha*} = L_alpha
};
AlphaStarReport alpha_star(HFSet alpha, const Budget &budget = {});
// The Σ0 formula "D(L_x1) ⊆ x3" with x2 the graph {<gamma, D(L_gamma)>}.
std::string alpha_star_formula_text();
std::uint32_t alpha_star_k();

// Results of the stage-property checks for alpha <= max_alpha.
struct HierarchyCheck {
    std::string property;
    std::uint32_t alpha = 0;
    bool holds = true;
    bool checked = true; // false when a needed stage was beyond the budget
    bool informational = false; // reported but not a claimed property
    std::string detail;
};
std::vector<HierarchyCheck> check_hierarchy_properties(std::uint32_t max_alpha, const Budget &budget = {});

} // namespace hfl
