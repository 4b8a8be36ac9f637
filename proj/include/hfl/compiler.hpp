// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <string>
#include <vector>

#include "hfl/formula.hpp"
#include "hfl/ops.hpp"

namespace hfl {

struct CompilationResult {
    OpTerm term;
    std::vector<std::string> var_order; // x_1 .. x_n
    std::size_t stage_bound = 0;
    // Names of the term's free variables in argument order. For a
    // comprehension these are var_order; for a separation term the first one
    // is the separated domain.
    std::vector<std::string> arguments;
};

// Term over the 13 fundamental operations computing
// {<x_n, ..., x_1> in a_n × ... × a_1 | f}. The variable x_k of the term is
// bound to a_k at evaluation time (see comprehension_env).
CompilationResult compile_comprehension(const Formula &f, const std::vector<std::string> &vars);

// Term computing {x_i in a | f} from (a, x_1, ..., x_{i-1}, x_{i+1}, ..., x_n).
// i is 1-based.
CompilationResult compile_separation(const Formula &f, std::size_t i, const std::vector<std::string> &vars);

// Application depth of the i = 1 separation term plus 2. Variables are the
// free variables in order of first occurrence.
std::size_t stage_bound(const Formula &f);

TermEnv comprehension_env(const CompilationResult &r, const std::vector<HFSet> &args);
TermEnv separation_env(const CompilationResult &r, HFSet domain, const std::vector<HFSet> &others);

} // namespace hfl
