// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "hfl/formula.hpp"
#include "hfl/kripke.hpp"

namespace hfl {

// Handle of an interned name. Two handles are equal iff the names have the
// same base node and literally the same graph.
using NameId = std::uint32_t;

// Names over a preorder frame. A name based at p is a function on the cone of
// p whose value at q is a finite set of names based at q, coherent under
// restriction: h ∈ g(q) and q R r imply h restricted to r ∈ g(r).
class FullModel {
  public:
    explicit FullModel(Frame frame, std::size_t max_names = 200'000); // InvalidModel unless a preorder

    const Frame &frame() const { return frame_; }

    // graph[k] is the value at the k-th node of cone(base) in increasing order.
    // InvalidArgument when a member is based elsewhere or coherence fails.
    NameId make(std::size_t base, std::vector<std::vector<NameId>> graph);
    std::size_t base(NameId g) const { return data_[g].base; }
    // g(q); NodeOutsideCone when q is not in the cone of base(g).
    const std::vector<NameId> &at(NameId g, std::size_t q) const;
    std::uint32_t stage(NameId g) const { return data_[g].stage; }
    bool coherent(NameId g);

    NameId restrict(NameId g, std::size_t q);
    NameId canonical(HFSet x, std::size_t p);
    // Based at the frame root: 1^s on the cone of p, 0^s elsewhere.
    NameId one_p(std::size_t p);
    // Pointwise union; the name with the larger cone is first restricted to
    // the base of the other.
    NameId name_union(NameId g, NameId h);
    // g ∪ {g}
    NameId name_succ(NameId g);

    // All names at p of stage below cutoff (memoized). BudgetExceeded when
    // more than max_names would be produced.
    const std::vector<NameId> &universe(std::size_t p, std::uint32_t cutoff);

    // Forcing at p. Parameters are names whose cone contains p; constants are
    // canonical names at the current node. Unbounded and subset quantifiers
    // range over universe(q, cutoff); bounded ones read the bound's graph.
    using Params = std::map<std::string, NameId, std::less<>>;
    bool forces(std::size_t p, const Formula &f, const Params &params, std::uint32_t cutoff);

    std::string to_string(NameId g) const;
    nlohmann::json to_json(NameId g) const;
    std::size_t name_count() const { return data_.size(); }

  private:
    struct Data {
        std::size_t base;
        std::vector<std::vector<NameId>> graph; // by cone position
        std::uint32_t stage;
    };
    Frame frame_;
    std::size_t max_names_;
    std::vector<std::vector<std::size_t>> cones_;
    std::vector<Data> data_;
    std::map<std::pair<std::size_t, std::vector<std::vector<NameId>>>, NameId> index_;
    std::map<std::pair<NameId, std::size_t>, NameId> restrict_memo_;
    std::map<std::pair<HFSet, std::size_t>, NameId> canonical_memo_;
    std::map<std::pair<std::size_t, std::uint32_t>, std::vector<NameId>> universe_memo_;

    std::size_t position(std::size_t base, std::size_t q) const; // NodeOutsideCone
    NameId intern(std::size_t base, std::vector<std::vector<NameId>> graph);
    struct Scope;
    bool run(std::size_t p, const FormulaNode &f, Scope &s, std::uint32_t cutoff);
    bool subset(std::size_t p, NameId x, NameId y);
};

// δ-coding of a bit string: with c_n = n ∪ (a + 1) for the name a, the code
// is the union over n < |bits| of c_n, or of c_n + 1 when bit n is set.
NameId delta_encode(FullModel &m, const std::vector<bool> &bits, NameId alpha);
// Bit n is set iff the root forces c_n ∈ delta.
std::vector<bool> delta_decode(FullModel &m, NameId delta, NameId alpha, std::size_t n_max);
// c_n for the name alpha, based at the root
NameId delta_component(FullModel &m, NameId alpha, std::size_t n);

// The two-node chain 0 R 1.
Frame two_node_chain();

} // namespace hfl
