// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <cstdlib>
#include <iostream>

#include "hfl/acceptance.hpp"

int main(int argc, char **argv) {
    hfl::AcceptanceOptions opts;
    std::vector<hfl::CriterionResult> results;
    if (argc > 1) {
        for (int i = 1; i < argc; ++i) {
            results.push_back(hfl::run_criterion(std::atoi(argv[i]), opts));
            std::cout << hfl::result_line(results.back()) << std::endl;
        }
    } else {
        results = hfl::run_acceptance(
            opts, [](const hfl::CriterionResult &r) { std::cout << hfl::result_line(r) << std::endl; });
    }
    int failed = 0;
    for (const auto &r : results) failed += !r.pass;
    std::cout << results.size() - failed << "/" << results.size() << " criteria pass" << std::endl;
    return failed ? 1 : 0;
}
