// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hfl/erec.hpp"
#include "hfl/oracle.hpp"

namespace hfl {

// wt: with the truth conjunct on implications; w: without; wp: wt with the
// VM in powerset mode.
enum class Variant { WT, W, WP };
const char *to_string(Variant v);
Variant variant_from_name(std::string_view name); // InvalidArgument

struct Verdict {
    enum class Kind { Realized, NotRealized, Unknown };
    Kind kind = Kind::Realized;
    std::string reason; // Unknown only: "fuel" or "search-bound"

    static Verdict realized() { return {}; }
    static Verdict not_realized() { return {Kind::NotRealized, {}}; }
    static Verdict unknown(std::string why) { return {Kind::Unknown, std::move(why)}; }
    bool is(Kind k) const { return kind == k; }
    friend bool operator==(const Verdict &, const Verdict &) = default;
};
const char *to_string(Verdict::Kind k);
std::string to_string(const Verdict &v);

// Unbounded quantifiers and the ∀c of implications range over `search` only.
// A clause that passes on the whole search set but quantifies over every set
// is reported Unknown(search-bound); every reported NotRealized is final.
struct RealizeOptions {
    std::uint64_t fuel = 100'000; // per application
    std::vector<HFSet> search = sets_of_rank_below(4);
};

Verdict check(Variant v, HFSet a, const Formula &f, const Env &env, const RealizeOptions &opts = {});
inline Verdict check_wt(HFSet a, const Formula &f, const Env &env, const RealizeOptions &opts = {}) {
    return check(Variant::WT, a, f, env, opts);
}
inline Verdict check_w(HFSet a, const Formula &f, const Env &env, const RealizeOptions &opts = {}) {
    return check(Variant::W, a, f, env, opts);
}
inline Verdict check_wp(HFSet a, const Formula &f, const Env &env, const RealizeOptions &opts = {}) {
    return check(Variant::WP, a, f, env, opts);
}

// The state of k applied to r: a realizer whose application always yields r.
HFSet constant_realizer(HFSet r);

struct RealizeTriple {
    std::string label;
    HFSet realizer;
    Formula formula;
    Env env;
};
using Checker = std::function<Verdict(const RealizeTriple &)>;

struct AuditEntry {
    RealizeTriple triple;
    Verdict verdict;
    bool truth = false;
    bool violation = false; // Realized but false
};
struct AuditReport {
    std::vector<AuditEntry> entries;
    std::size_t violations = 0;
    bool pass() const { return violations == 0; }
};
// InvalidArgument when a formula is not bounded.
AuditReport truth_audit(const std::vector<RealizeTriple> &corpus, const Checker &checker);
AuditReport truth_audit(const std::vector<RealizeTriple> &corpus, Variant v = Variant::WT,
                        const RealizeOptions &opts = {});
nlohmann::json to_json(const AuditReport &r);

// Bounded triples covering every clause, with realized and refuted cases.
std::vector<RealizeTriple> stock_realizability_corpus();

} // namespace hfl
