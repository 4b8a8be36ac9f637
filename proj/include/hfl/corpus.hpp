// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "hfl/erec.hpp"
#include "hfl/formula.hpp"

namespace hfl {

// Σ0 formulas in the free variables x1, x2, x3 (not all of them occur in
// every formula). Every connective occurs, and universal quantifiers are
// bounded both by variables and by constants.
const std::vector<std::string> &sigma0_corpus();
inline const std::vector<std::string> &sigma0_vars() {
    static const std::vector<std::string> v{"x1", "x2", "x3"};
    return v;
}

// Random sets with |trcl(x)| <= max_trcl.
HFSet random_small_set(std::mt19937_64 &rng, std::size_t max_trcl);
// All sets with |trcl(x)| <= n, for n <= 4 (canonical order).
std::vector<HFSet> sets_with_small_closure(std::size_t n);

// Closed application terms exercising every clause, with names.
struct VmCase {
    std::string name;
    WTerm term;
    bool pmode = false;
};
std::vector<VmCase> vm_corpus();

// A random formula of depth <= max_depth over the free variables a and b,
// using every connective and bounded and unbounded quantifiers.
Formula random_kripke_formula(std::mt19937_64 &rng, std::size_t max_depth);

} // namespace hfl
