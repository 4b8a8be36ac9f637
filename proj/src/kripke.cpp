// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "hfl/kripke.hpp"

#include <fstream>
#include <numeric>
#include <random>

namespace hfl {

std::vector<std::size_t> Frame::cone(std::size_t p) const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < size(); ++q)
        if (rel[p][q]) out.push_back(q);
    return out;
}

std::size_t Frame::node(const std::string &name) const {
    for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) return k;
    throw Error(ErrorKind::InvalidArgument, "unknown node '" + name + "'");
}

std::optional<std::size_t> Frame::root() const {
    for (std::size_t p = 0; p < size(); ++p) {
        bool all = true;
        for (std::size_t q = 0; q < size(); ++q) all = all && rel[p][q];
        if (all) return p;
    }
    return std::nullopt;
}

bool Frame::is_preorder() const {
    for (std::size_t p = 0; p < size(); ++p) {
        if (!rel[p][p]) return false;
        for (std::size_t q = 0; q < size(); ++q)
            for (std::size_t r = 0; r < size(); ++r)
                if (rel[p][q] && rel[q][r] && !rel[p][r]) return false;
    }
    return true;
}

std::optional<std::size_t> NodeStructure::find(const std::string &name) const {
    for (std::size_t k = 0; k < elements.size(); ++k)
        if (elements[k] == name) return k;
    return std::nullopt;
}

std::size_t NodeStructure::element(const std::string &name) const {
    if (auto k = find(name)) return *k;
    throw Error(ErrorKind::InvalidArgument, "unknown element '" + name + "'");
}

ValidationReport validate(const KripkeModel &m) {
    ValidationReport r;
    const Frame &f = m.frame;
    auto fail = [&](std::string msg) {
        r.valid = false;
        r.violations.push_back(std::move(msg));
    };
    const std::size_t n = f.size();
    if (n == 0) fail("the frame has no nodes");
    if (f.rel.size() != n || m.structures.size() != n) {
        fail("relation or structure table does not match the node count");
        return r;
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (f.rel[p].size() != n) {
            fail("relation row of " + f.names[p] + " has the wrong length");
            return r;
        }
    }
    r.notes.push_back("accessibility is required to be a preorder (reflexive and transitive)");
    for (std::size_t p = 0; p < n; ++p) {
        if (!f.rel[p][p]) fail("not reflexive at " + f.names[p]);
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t s = 0; s < n; ++s)
                if (f.rel[p][q] && f.rel[q][s] && !f.rel[p][s])
                    fail("not transitive: " + f.names[p] + " R " + f.names[q] + " R " + f.names[s]);
    }
    for (std::size_t p = 0; p < n; ++p) {
        const NodeStructure &d = m.structures[p];
        const std::size_t k = d.elements.size();
        if (k == 0) fail("empty domain at " + f.names[p]);
        if (d.eq_class.size() != k) {
            fail("equality table at " + f.names[p] + " has the wrong length");
            continue;
        }
        for (std::size_t a = 0; a < k; ++a)
            if (d.eq_class[a] >= k || d.eq_class[d.eq_class[a]] != d.eq_class[a])
                fail("equality at " + f.names[p] + " is not given by class representatives");
        for (auto [a, b] : d.member) {
            if (a >= k || b >= k) {
                fail("membership at " + f.names[p] + " refers outside the domain");
                continue;
            }
            for (std::size_t a2 = 0; a2 < k; ++a2)
                for (std::size_t b2 = 0; b2 < k; ++b2)
                    if (d.eq(a, a2) && d.eq(b, b2) && !d.in(a2, b2))
                        fail("membership at " + f.names[p] + " is not a congruence for " + d.elements[a2] +
                             " ∈ " + d.elements[b2]);
        }
    }
    if (!r.valid) return r;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (!f.rel[p][q]) continue;
            auto it = m.transitions.find({p, q});
            const std::string edge = f.names[p] + "->" + f.names[q];
            if (it == m.transitions.end()) {
                fail("missing transition " + edge);
                continue;
            }
            const auto &map = it->second;
            const NodeStructure &dp = m.structures[p], &dq = m.structures[q];
            if (map.size() != dp.elements.size()) {
                fail("transition " + edge + " is not total");
                continue;
            }
            bool inRange = true;
            for (std::size_t v : map) inRange = inRange && v < dq.elements.size();
            if (!inRange) {
                fail("transition " + edge + " leaves the target domain");
                continue;
            }
            if (p == q)
                for (std::size_t a = 0; a < map.size(); ++a)
                    if (map[a] != a) fail("transition " + edge + " is not the identity");
            for (std::size_t a = 0; a < map.size(); ++a)
                for (std::size_t b = 0; b < map.size(); ++b) {
                    if (dp.eq(a, b) && !dq.eq(map[a], map[b]))
                        fail("transition " + edge + " does not preserve " + dp.elements[a] + " = " + dp.elements[b]);
                    if (dp.in(a, b) && !dq.in(map[a], map[b]))
                        fail("transition " + edge + " does not preserve " + dp.elements[a] + " ∈ " + dp.elements[b]);
                }
        }
    if (!r.valid) return r;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t s = 0; s < n; ++s) {
                if (!f.rel[p][q] || !f.rel[q][s]) continue;
                const auto &pq = m.transitions.at({p, q}), &qs = m.transitions.at({q, s}),
                           &ps = m.transitions.at({p, s});
                for (std::size_t a = 0; a < pq.size(); ++a)
                    if (ps[a] != qs[pq[a]]) {
                        fail("composition fails for " + f.names[p] + "->" + f.names[q] + "->" + f.names[s] + " at " +
                             m.structures[p].elements[a]);
                        break;
                    }
            }
    return r;
}

namespace {

using Stack = std::vector<std::pair<std::string, std::size_t>>;

struct Eval {
    const KripkeModel &m;
    const std::vector<std::vector<std::size_t>> &cones;

    std::size_t lookup(const Term &t, std::size_t p, const Stack &env) const {
        if (!t.is_var()) {
            const std::string name = to_string(t.value);
            auto k = m.structures[p].find(name);
            if (!k) throw Error(ErrorKind::InvalidArgument, "constant " + name + " is not an element at this node");
            return *k;
        }
        for (auto it = env.rbegin(); it != env.rend(); ++it)
            if (it->first == t.name) return it->second;
        throw Error(ErrorKind::UnboundVariable, "variable '" + t.name + "' is not assigned");
    }

    Stack transport(const Stack &env, std::size_t p, std::size_t q) const {
        if (p == q) return env;
        const auto &map = m.transitions.at({p, q});
        Stack out = env;
        for (auto &e : out) e.second = map[e.second];
        return out;
    }

    bool subset(std::size_t p, std::size_t x, std::size_t y, const Stack &) const {
        // p ⊩ ∀z (z ∈ x → z ∈ y)
        for (std::size_t q : cones[p]) {
            const auto &map = m.transitions.at({p, q});
            const NodeStructure &d = m.structures[q];
            for (std::size_t z = 0; z < d.elements.size(); ++z)
                if (d.in(z, map[x]) && !d.in(z, map[y])) return false;
        }
        return true;
    }

    bool run(std::size_t p, const FormulaNode &f, Stack &env) const {
        const NodeStructure &d = m.structures[p];
        switch (f.kind) {
        case FKind::Falsum: return false;
        case FKind::Eq: return d.eq(lookup(f.lhs, p, env), lookup(f.rhs, p, env));
        case FKind::In: return d.in(lookup(f.lhs, p, env), lookup(f.rhs, p, env));
        case FKind::And: return run(p, *f.a, env) && run(p, *f.b, env);
        case FKind::Or: return run(p, *f.a, env) || run(p, *f.b, env);
        case FKind::Imp:
            for (std::size_t q : cones[p]) {
                Stack e = transport(env, p, q);
                if (run(q, *f.a, e) && !run(q, *f.b, e)) return false;
            }
            return true;
        case FKind::UForall:
        case FKind::BForall:
        case FKind::SubForall: {
            const bool hasBound = f.kind != FKind::UForall;
            const std::size_t b = hasBound ? lookup(f.bound, p, env) : 0;
            for (std::size_t q : cones[p]) {
                Stack e = transport(env, p, q);
                const std::size_t bq = hasBound ? (p == q ? b : m.transitions.at({p, q})[b]) : 0;
                const NodeStructure &dq = m.structures[q];
                e.emplace_back(f.var, 0);
                for (std::size_t x = 0; x < dq.elements.size(); ++x) {
                    if (f.kind == FKind::BForall && !dq.in(x, bq)) continue;
                    if (f.kind == FKind::SubForall && !subset(q, x, bq, e)) continue;
                    e.back().second = x;
                    if (!run(q, *f.a, e)) return false;
                }
            }
            return true;
        }
        case FKind::UExists:
        case FKind::BExists:
        case FKind::SubExists: {
            const bool hasBound = f.kind != FKind::UExists;
            const std::size_t b = hasBound ? lookup(f.bound, p, env) : 0;
            env.emplace_back(f.var, 0);
            bool found = false;
            for (std::size_t x = 0; x < d.elements.size() && !found; ++x) {
                if (f.kind == FKind::BExists && !d.in(x, b)) continue;
                if (f.kind == FKind::SubExists && !subset(p, x, b, env)) continue;
                env.back().second = x;
                found = run(p, *f.a, env);
            }
            env.pop_back();
            return found;
        }
        }
        return false;
    }
};

std::vector<std::vector<std::size_t>> all_cones(const Frame &f) {
    std::vector<std::vector<std::size_t>> c;
    for (std::size_t p = 0; p < f.size(); ++p) c.push_back(f.cone(p));
    return c;
}

} // namespace

Forcer::Forcer(const KripkeModel &m) : m_(m) {
    ValidationReport r = validate(m);
    if (!r.valid) throw Error(ErrorKind::InvalidModel, r.violations.front());
    cones_ = all_cones(m.frame);
}

bool Forcer::forces(std::size_t p, const Formula &f, const KAssignment &a) const {
    if (p >= m_.frame.size()) throw Error(ErrorKind::InvalidArgument, "node out of range");
    Stack env;
    for (const auto &[k, v] : a) {
        if (v >= m_.structures[p].elements.size())
            throw Error(ErrorKind::InvalidArgument, "assignment of '" + k + "' is outside the domain");
        env.emplace_back(k, v);
    }
    Eval e{m_, cones_};
    return e.run(p, *f, env);
}

bool Forcer::forces(std::size_t p, const Formula &f) const { return forces(p, f, default_assignment(m_, p, f)); }

bool Forcer::valid(const Formula &f) const {
    for (std::size_t p = 0; p < m_.frame.size(); ++p)
        if (!forces(p, f)) return false;
    return true;
}

KAssignment default_assignment(const KripkeModel &m, std::size_t p, const Formula &f) {
    KAssignment a;
    for (const auto &v : free_vars(f)) a[v] = m.structures.at(p).element(v);
    return a;
}

bool forces(const KripkeModel &m, std::size_t p, const Formula &f, const KAssignment &a) {
    return Forcer(m).forces(p, f, a);
}

bool valid_in_model(const KripkeModel &m, const Formula &f) { return Forcer(m).valid(f); }

KripkeModel truncate(const KripkeModel &m, std::size_t p) {
    const std::vector<std::size_t> keep = m.frame.cone(p);
    std::vector<std::size_t> index(m.frame.size(), SIZE_MAX);
    for (std::size_t k = 0; k < keep.size(); ++k) index[keep[k]] = k;
    KripkeModel t;
    for (std::size_t q : keep) {
        t.frame.names.push_back(m.frame.names[q]);
        t.structures.push_back(m.structures[q]);
        std::vector<bool> row;
        for (std::size_t r : keep) row.push_back(m.frame.rel[q][r]);
        t.frame.rel.push_back(row);
    }
    for (const auto &[edge, map] : m.transitions)
        if (index[edge.first] != SIZE_MAX && index[edge.second] != SIZE_MAX)
            t.transitions[{index[edge.first], index[edge.second]}] = map;
    return t;
}

namespace {

NodeStructure plain(std::vector<std::string> elems) {
    NodeStructure d;
    d.elements = std::move(elems);
    d.eq_class.resize(d.elements.size());
    std::iota(d.eq_class.begin(), d.eq_class.end(), 0);
    return d;
}

void identity_transitions(KripkeModel &m) {
    for (std::size_t p = 0; p < m.frame.size(); ++p)
        for (std::size_t q = 0; q < m.frame.size(); ++q)
            if (m.frame.rel[p][q]) {
                std::vector<std::size_t> map;
                for (const auto &e : m.structures[p].elements) map.push_back(m.structures[q].element(e));
                m.transitions[{p, q}] = map;
            }
}

} // namespace

KripkeModel excluded_middle_counterexample() {
    KripkeModel m;
    m.frame.names = {"0", "1"};
    m.frame.rel = {{true, true}, {false, true}};
    m.structures = {plain({"a", "b"}), plain({"a", "b"})};
    m.structures[1].eq_class = {0, 0};
    identity_transitions(m);
    return m;
}

KripkeModel single_node_model(HFSet u) {
    const HFSet dom = insert(transitive_closure(u), u);
    std::vector<HFSet> elems = canonical_elements(dom);
    std::vector<std::string> names;
    for (HFSet x : elems) names.push_back(to_string(x));
    KripkeModel m;
    m.frame.names = {"0"};
    m.frame.rel = {{true}};
    m.structures = {plain(names)};
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b)
            if (elems[b].contains(elems[a])) m.structures[0].member.insert({a, b});
    identity_transitions(m);
    return m;
}

KripkeModel monotone_model(const Frame &frame, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto up_closed = [&] {
        std::vector<bool> in(frame.size(), false);
        for (std::size_t p = 0; p < frame.size(); ++p)
            if (rng() % 3 == 0)
                for (std::size_t q = 0; q < frame.size(); ++q)
                    if (frame.related(p, q)) in[q] = true;
        return in;
    };
    const std::vector<bool> member = up_closed(), equal = up_closed();
    KripkeModel m;
    m.frame = frame;
    for (std::size_t p = 0; p < frame.size(); ++p) {
        NodeStructure d = plain({"a", "b"});
        if (equal[p]) d.eq_class = {0, 0};
        if (member[p]) {
            d.member.insert({0, 1});
            if (equal[p]) d.member.insert({{0, 0}, {1, 1}, {1, 0}});
        }
        m.structures.push_back(std::move(d));
    }
    identity_transitions(m);
    return m;
}

std::vector<Frame> all_preorders(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (p != q) off.push_back({p, q});
    std::vector<Frame> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
        Frame f;
        for (std::size_t p = 0; p < n; ++p) f.names.push_back(std::to_string(p));
        f.rel.assign(n, std::vector<bool>(n, false));
        for (std::size_t p = 0; p < n; ++p) f.rel[p][p] = true;
        for (std::size_t k = 0; k < off.size(); ++k)
            if (mask >> k & 1u) f.rel[off[k].first][off[k].second] = true;
        if (f.is_preorder()) out.push_back(std::move(f));
    }
    return out;
}

Frame frame_from_json(const nlohmann::json &j) {
    try {
        Frame f;
        for (const auto &n : j.at("nodes")) f.names.push_back(n.get<std::string>());
        f.rel.assign(f.size(), std::vector<bool>(f.size(), false));
        for (const auto &e : j.at("edges")) f.rel[f.node(e.at(0))][f.node(e.at(1))] = true;
        return f;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::InvalidModel, std::string("malformed frame: ") + e.what());
    }
}

KripkeModel model_from_json(const nlohmann::json &j) {
    try {
        KripkeModel m;
        for (const auto &n : j.at("nodes")) m.frame.names.push_back(n.get<std::string>());
        const std::size_t n = m.frame.size();
        m.frame.rel.assign(n, std::vector<bool>(n, false));
        for (const auto &e : j.at("edges")) m.frame.rel[m.frame.node(e.at(0))][m.frame.node(e.at(1))] = true;
        m.structures.resize(n);
        const auto &st = j.at("structures");
        for (std::size_t p = 0; p < n; ++p) {
            const auto &s = st.at(m.frame.names[p]);
            NodeStructure d = plain(s.at("domain").get<std::vector<std::string>>());
            if (s.contains("eq"))
                for (const auto &cls : s.at("eq")) {
                    std::size_t rep = SIZE_MAX;
                    for (const auto &e : cls) {
                        const std::size_t k = d.element(e);
                        if (rep == SIZE_MAX) rep = k;
                        rep = std::min(rep, k);
                    }
                    for (const auto &e : cls) d.eq_class[d.element(e)] = rep;
                }
            if (s.contains("membership"))
                for (const auto &pr : s.at("membership")) d.member.insert({d.element(pr.at(0)), d.element(pr.at(1))});
            m.structures[p] = std::move(d);
        }
        if (j.contains("transitions"))
            for (const auto &t : j.at("transitions")) {
                const std::size_t p = m.frame.node(t.at("from")), q = m.frame.node(t.at("to"));
                std::vector<std::size_t> map(m.structures[p].elements.size(), SIZE_MAX);
                for (const auto &[k, v] : t.at("map").items())
                    map[m.structures[p].element(k)] = m.structures[q].element(v.get<std::string>());
                m.transitions[{p, q}] = map;
            }
        // related pairs without an explicit map use identity by element name
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                if (!m.frame.rel[p][q] || m.transitions.count({p, q})) continue;
                std::vector<std::size_t> map;
                bool ok = true;
                for (const auto &e : m.structures[p].elements) {
                    auto k = m.structures[q].find(e);
                    ok = ok && k.has_value();
                    map.push_back(k.value_or(0));
                }
                if (ok) m.transitions[{p, q}] = map;
            }
        return m;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::InvalidModel, std::string("malformed model: ") + e.what());
    }
}

nlohmann::json model_to_json(const KripkeModel &m) {
    nlohmann::json j;
    j["nodes"] = m.frame.names;
    j["edges"] = nlohmann::json::array();
    for (std::size_t p = 0; p < m.frame.size(); ++p)
        for (std::size_t q = 0; q < m.frame.size(); ++q)
            if (m.frame.rel[p][q]) j["edges"].push_back({m.frame.names[p], m.frame.names[q]});
    for (std::size_t p = 0; p < m.frame.size(); ++p) {
        const NodeStructure &d = m.structures[p];
        nlohmann::json s;
        s["domain"] = d.elements;
        std::map<std::size_t, std::vector<std::string>> classes;
        for (std::size_t a = 0; a < d.elements.size(); ++a) classes[d.eq_class[a]].push_back(d.elements[a]);
        s["eq"] = nlohmann::json::array();
        for (const auto &[rep, cls] : classes)
            if (cls.size() > 1) s["eq"].push_back(cls);
        s["membership"] = nlohmann::json::array();
        for (auto [a, b] : d.member) s["membership"].push_back({d.elements[a], d.elements[b]});
        j["structures"][m.frame.names[p]] = s;
    }
    j["transitions"] = nlohmann::json::array();
    for (const auto &[edge, map] : m.transitions) {
        nlohmann::json t;
        t["from"] = m.frame.names[edge.first];
        t["to"] = m.frame.names[edge.second];
        for (std::size_t a = 0; a < map.size(); ++a)
            t["map"][m.structures[edge.first].elements[a]] = m.structures[edge.second].elements[map[a]];
        j["transitions"].push_back(t);
    }
    return j;
}

KripkeModel load_model(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    try {
        return model_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorKind::InvalidModel, std::string("malformed model: ") + e.what());
    }
}

} // namespace hfl
