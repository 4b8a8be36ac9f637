// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hfl/formula.hpp"

namespace hfl {

// Classical brute-force evaluation. Unbounded quantifiers range over the
// elements of universe_bound.
struct Env {
    std::map<std::string, HFSet, std::less<>> assignment;
    std::optional<HFSet> universe_bound;
};

HFSet term_value(const Term &t, const Env &env);
bool eval_formula(const Formula &f, const Env &env);
// {<x_n, ..., x_1> in a_n × ... × a_1 | f}; n = 1 gives plain elements.
HFSet comprehension(const Formula &f, const std::vector<std::string> &vars, const std::vector<HFSet> &args);

} // namespace hfl
