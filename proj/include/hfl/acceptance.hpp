// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hfl/hierarchy.hpp"

namespace hfl {

struct AcceptanceOptions {
    std::uint64_t seed = 20260415;
    std::uint64_t fuel = 100'000;
    Budget budget;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string summary;  // one line
    nlohmann::json details;
    double seconds = 0;
};

inline constexpr int kCriterionCount = 10;

// Runs one acceptance criterion (1..10). Never throws: an exception inside a
// check is reported as a failure with its message.
CriterionResult run_criterion(int id, const AcceptanceOptions &opts = {});
// All criteria in order; `progress` sees each result as soon as it is ready.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &opts = {},
                                            const std::function<void(const CriterionResult &)> &progress = {});
std::string result_line(const CriterionResult &r);
nlohmann::json to_json(const CriterionResult &r);

} // namespace hfl
