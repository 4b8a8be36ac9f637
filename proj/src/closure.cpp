// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
//
// One-step definable closure kernels.
#include <omp.h>

#include <atomic>
#include <exception>
#include <mutex>
#include <unordered_set>

#include "hfl/hierarchy.hpp"

namespace hfl {

namespace {

std::size_t pair_count(HFSet x) {
    std::size_t n = 0;
    for (HFSet e : x)
        if (is_pair(e)) ++n;
    return n;
}

// Refuses applications whose output alone would blow the budget.
void guard(OpCode code, HFSet x, HFSet y, const Budget &budget) {
    std::size_t projected = 0;
    switch (code) {
    case OpCode::Times: projected = x.size() * y.size(); break;
    case OpCode::Abc:
    case OpCode::Acb: projected = pair_count(x) * y.size(); break;
    default: return;
    }
    if (projected > budget.max_result_size)
        throw Error(ErrorKind::StageTooLarge, std::string(op_name(code)) + " would produce " +
                                                  std::to_string(projected) + " elements");
}

void check_grid(std::size_t m, std::size_t codes, std::size_t arity, const Budget &budget) {
    std::size_t apps = codes;
    for (std::size_t i = 0; i < arity; ++i) {
        if (m != 0 && apps > budget.max_applications / m)
            throw Error(ErrorKind::StageTooLarge, "closure of a " + std::to_string(m) +
                                                      "-element set exceeds the application budget");
        apps *= m;
    }
}

HFSet finish(HFSet b, std::unordered_set<HFSet> &acc, const Budget &budget) {
    for (HFSet e : b) acc.insert(e);
    if (acc.size() > budget.max_elements)
        throw Error(ErrorKind::StageTooLarge, "stage has more than " + std::to_string(budget.max_elements) + " elements");
    return HFSet::of(std::vector<HFSet>(acc.begin(), acc.end()));
}

} // namespace

HFSet d_small_serial(HFSet b, const Budget &budget) {
    const std::vector<HFSet> es(b.begin(), b.end());
    check_grid(es.size(), kFundamentalOps.size(), 2, budget);
    std::unordered_set<HFSet> acc;
    for (HFSet x : es)
        for (HFSet y : es)
            for (OpCode code : kFundamentalOps) {
                guard(code, x, y, budget);
                acc.insert(eval_fund(code, x, y));
            }
    return finish(b, acc, budget);
}

HFSet d_small(HFSet b, const Budget &budget) {
    const std::vector<HFSet> es(b.begin(), b.end());
    const auto m = static_cast<std::int64_t>(es.size());
    check_grid(es.size(), kFundamentalOps.size(), 2, budget);
    std::unordered_set<HFSet> acc;
    std::mutex accMutex;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};

#pragma omp parallel
    {
        std::unordered_set<HFSet> local;
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < m; ++i) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                for (HFSet y : es)
                    for (OpCode code : kFundamentalOps) {
                        guard(code, es[i], y, budget);
                        local.insert(eval_fund(code, es[i], y));
                    }
                if (local.size() > budget.max_elements)
                    throw Error(ErrorKind::StageTooLarge,
                                "stage has more than " + std::to_string(budget.max_elements) + " elements");
            } catch (...) {
                std::lock_guard lock(accMutex);
                if (!failure) failure = std::current_exception();
                failed = true;
            }
        }
        std::lock_guard lock(accMutex);
        acc.merge(local);
    }
    if (failure) std::rethrow_exception(failure);
    return finish(b, acc, budget);
}

HFSet d_small_extended(HFSet b, const Budget &budget) {
    const std::vector<HFSet> es(b.begin(), b.end());
    check_grid(es.size(), kAuxOps.size(), 3, budget);
    std::unordered_set<HFSet> acc;
    const HFSet base = d_small(b, budget);
    acc.insert(base.begin(), base.end());
    for (HFSet x : es)
        for (HFSet y : es)
            for (HFSet z : es)
                for (OpCode code : kAuxOps) acc.insert(eval_aux_g(code, x, y, z));
    return finish(b, acc, budget);
}

HFSet d_closure(HFSet b, const Budget &budget) { return d_small(insert(b, b), budget); }

} // namespace hfl
