// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "hfl/formula.hpp"

namespace hfl {

// Nodes 0..n-1 with an accessibility relation.
struct Frame {
    std::vector<std::string> names;
    std::vector<std::vector<bool>> rel; // rel[p][q]: p R q

    std::size_t size() const { return names.size(); }
    bool related(std::size_t p, std::size_t q) const { return rel[p][q]; }
    std::vector<std::size_t> cone(std::size_t p) const;
    std::size_t node(const std::string &name) const; // InvalidArgument if unknown
    // A node related to every node, if any.
    std::optional<std::size_t> root() const;
    bool is_preorder() const;
};

// A finite classical structure with interpreted equality.
struct NodeStructure {
    std::vector<std::string> elements;
    std::vector<std::size_t> eq_class;                     // representative per element
    std::set<std::pair<std::size_t, std::size_t>> member; // (a, b): a ∈ b

    std::size_t element(const std::string &name) const; // InvalidArgument if unknown
    std::optional<std::size_t> find(const std::string &name) const;
    bool eq(std::size_t a, std::size_t b) const { return eq_class[a] == eq_class[b]; }
    bool in(std::size_t a, std::size_t b) const { return member.count({a, b}) > 0; }
};

struct KripkeModel {
    Frame frame;
    std::vector<NodeStructure> structures;
    // transition maps for related pairs, indexed by element
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> transitions;
};

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
};
// Reflexivity, transitivity (required here although the base definition only
// asks for reflexivity), identity on loops, homomorphism and composition.
ValidationReport validate(const KripkeModel &m);

// Variable assignment: variable name -> element index at the evaluation node.
using KAssignment = std::map<std::string, std::size_t, std::less<>>;

// Forcing over a validated model. Constants in formulas denote the element
// named by their HF literal at the current node.
class Forcer {
  public:
    explicit Forcer(const KripkeModel &m); // InvalidModel if validation fails
    bool forces(std::size_t p, const Formula &f, const KAssignment &a) const;
    // Free variables are bound to the element of the same name at p.
    bool forces(std::size_t p, const Formula &f) const;
    bool valid(const Formula &f) const;
    const KripkeModel &model() const { return m_; }

  private:
    const KripkeModel &m_;
    std::vector<std::vector<std::size_t>> cones_;
};

bool forces(const KripkeModel &m, std::size_t p, const Formula &f, const KAssignment &a);
bool valid_in_model(const KripkeModel &m, const Formula &f);
KAssignment default_assignment(const KripkeModel &m, std::size_t p, const Formula &f);

// The model restricted to the cone of p.
KripkeModel truncate(const KripkeModel &m, std::size_t p);

// Two nodes 0 R 1 with domain {a, b}; a = b holds at node 1 only.
KripkeModel excluded_middle_counterexample();
// One node whose domain is the transitive closure of u together with u, with
// true equality and membership; elements are named by their HF literals.
KripkeModel single_node_model(HFSet u);
// Elements a and b at every node with identity transitions; a ∈ b and a = b
// each hold on a seeded random upward closed set of nodes.
KripkeModel monotone_model(const Frame &frame, std::uint64_t seed);
// Every preorder on n labeled nodes, named "0".."n-1".
std::vector<Frame> all_preorders(std::size_t n);

// {"nodes": [...], "edges": [[p, q], ...]}; edges are taken literally, so
// reflexive pairs must be listed.
Frame frame_from_json(const nlohmann::json &j);
KripkeModel model_from_json(const nlohmann::json &j);
nlohmann::json model_to_json(const KripkeModel &m);
KripkeModel load_model(const std::string &path);

} // namespace hfl
