// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "hfl/full_model.hpp"

#include <algorithm>
#include <sstream>

namespace hfl {

Frame two_node_chain() {
    Frame f;
    f.names = {"0", "1"};
    f.rel = {{true, true}, {false, true}};
    return f;
}

FullModel::FullModel(Frame frame, std::size_t max_names) : frame_(std::move(frame)), max_names_(max_names) {
    if (frame_.size() == 0 || !frame_.is_preorder())
        throw Error(ErrorKind::InvalidModel, "the frame must be a non-empty preorder");
    for (std::size_t p = 0; p < frame_.size(); ++p) cones_.push_back(frame_.cone(p));
}

std::size_t FullModel::position(std::size_t base, std::size_t q) const {
    const auto &c = cones_.at(base);
    auto it = std::lower_bound(c.begin(), c.end(), q);
    if (it == c.end() || *it != q)
        throw Error(ErrorKind::NodeOutsideCone,
                    "node " + frame_.names.at(q) + " is not in the cone of " + frame_.names[base]);
    return static_cast<std::size_t>(it - c.begin());
}

NameId FullModel::intern(std::size_t base, std::vector<std::vector<NameId>> graph) {
    std::uint32_t stage = 0;
    for (auto &v : graph) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        for (NameId h : v) stage = std::max(stage, data_[h].stage + 1);
    }
    auto key = std::make_pair(base, graph);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    if (data_.size() >= max_names_)
        throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(max_names_) + " names");
    const NameId id = static_cast<NameId>(data_.size());
    data_.push_back({base, std::move(graph), stage});
    index_.emplace(std::move(key), id);
    return id;
}

const std::vector<NameId> &FullModel::at(NameId g, std::size_t q) const {
    return data_.at(g).graph[position(data_[g].base, q)];
}

NameId FullModel::restrict(NameId g, std::size_t q) {
    const std::size_t b = data_.at(g).base;
    if (q == b) return g;
    position(b, q); // cone check
    if (auto it = restrict_memo_.find({g, q}); it != restrict_memo_.end()) return it->second;
    std::vector<std::vector<NameId>> graph;
    for (std::size_t r : cones_[q]) graph.push_back(data_[g].graph[position(b, r)]);
    const NameId out = intern(q, std::move(graph));
    restrict_memo_.emplace(std::make_pair(g, q), out);
    return out;
}

bool FullModel::coherent(NameId g) {
    const Data d = data_.at(g);
    for (std::size_t k = 0; k < cones_[d.base].size(); ++k) {
        const std::size_t q = cones_[d.base][k];
        for (NameId h : d.graph[k]) {
            if (data_[h].base != q) return false;
            if (data_[h].stage >= d.stage) return false;
            for (std::size_t r : cones_[q]) {
                const auto &gr = d.graph[position(d.base, r)];
                if (!std::binary_search(gr.begin(), gr.end(), restrict(h, r))) return false;
            }
        }
    }
    return true;
}

NameId FullModel::make(std::size_t base, std::vector<std::vector<NameId>> graph) {
    if (base >= frame_.size()) throw Error(ErrorKind::InvalidArgument, "base node out of range");
    if (graph.size() != cones_[base].size())
        throw Error(ErrorKind::InvalidArgument, "a name needs one value per node of its cone");
    for (std::size_t k = 0; k < graph.size(); ++k)
        for (NameId h : graph[k])
            if (h >= data_.size() || data_[h].base != cones_[base][k])
                throw Error(ErrorKind::InvalidArgument, "member name is based at the wrong node");
    const NameId g = intern(base, std::move(graph));
    if (!coherent(g)) throw Error(ErrorKind::InvalidArgument, "name is not coherent under restriction");
    return g;
}

NameId FullModel::canonical(HFSet x, std::size_t p) {
    if (auto it = canonical_memo_.find({x, p}); it != canonical_memo_.end()) return it->second;
    std::vector<std::vector<NameId>> graph;
    for (std::size_t q : cones_.at(p)) {
        std::vector<NameId> v;
        for (HFSet y : x) v.push_back(canonical(y, q));
        graph.push_back(std::move(v));
    }
    const NameId g = intern(p, std::move(graph));
    canonical_memo_.emplace(std::make_pair(x, p), g);
    return g;
}

NameId FullModel::one_p(std::size_t p) {
    auto root = frame_.root();
    if (!root) throw Error(ErrorKind::InvalidModel, "1_p needs a frame with a root");
    std::vector<std::vector<NameId>> graph;
    for (std::size_t s : cones_[*root]) {
        if (frame_.related(p, s)) graph.push_back({canonical(HFSet(), s)});
        else graph.push_back({});
    }
    return make(*root, std::move(graph));
}

NameId FullModel::name_union(NameId g, NameId h) {
    const std::size_t bg = base(g), bh = base(h);
    if (bg != bh) {
        if (frame_.related(bg, bh)) g = restrict(g, bh);
        else if (frame_.related(bh, bg)) h = restrict(h, bg);
        else throw Error(ErrorKind::InvalidArgument, "names with unrelated bases");
    }
    const std::size_t b = base(g);
    std::vector<std::vector<NameId>> graph;
    for (std::size_t k = 0; k < cones_[b].size(); ++k) {
        std::vector<NameId> v = data_[g].graph[k];
        v.insert(v.end(), data_[h].graph[k].begin(), data_[h].graph[k].end());
        graph.push_back(std::move(v));
    }
    return make(b, std::move(graph));
}

NameId FullModel::name_succ(NameId g) {
    const std::size_t b = base(g);
    std::vector<std::vector<NameId>> graph;
    for (std::size_t k = 0; k < cones_[b].size(); ++k) {
        std::vector<NameId> v = data_[g].graph[k];
        v.push_back(restrict(g, cones_[b][k]));
        graph.push_back(std::move(v));
    }
    return make(b, std::move(graph));
}

const std::vector<NameId> &FullModel::universe(std::size_t p, std::uint32_t cutoff) {
    if (auto it = universe_memo_.find({p, cutoff}); it != universe_memo_.end()) return it->second;
    std::vector<NameId> out;
    if (cutoff == 1) {
        out.push_back(intern(p, std::vector<std::vector<NameId>>(cones_[p].size())));
    } else if (cutoff > 1) {
        // Assign values node by node, smaller cones first, so the coherence
        // constraints towards already assigned nodes prune the candidates.
        std::vector<std::size_t> order = cones_[p];
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return cones_[a].size() < cones_[b].size(); });
        std::vector<std::vector<NameId>> chosen(cones_[p].size());
        std::vector<bool> assigned(frame_.size(), false);
        std::vector<std::vector<NameId>> below(frame_.size());
        for (std::size_t q : order) below[q] = universe(q, cutoff - 1);

        auto rec = [&](auto &&self, std::size_t idx) -> void {
            if (idx == order.size()) {
                const NameId g = intern(p, chosen);
                if (coherent(g)) out.push_back(g);
                return;
            }
            const std::size_t q = order[idx];
            std::vector<NameId> allowed;
            for (NameId h : below[q]) {
                bool ok = true;
                for (std::size_t r : cones_[q]) {
                    if (r == q || !assigned[r]) continue;
                    const auto &cr = chosen[position(p, r)];
                    if (!std::binary_search(cr.begin(), cr.end(), restrict(h, r))) {
                        ok = false;
                        break;
                    }
                }
                if (ok) allowed.push_back(h);
            }
            if (allowed.size() > 20)
                throw Error(ErrorKind::BudgetExceeded, "too many candidate members at node " + frame_.names[q]);
            assigned[q] = true;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << allowed.size()); ++mask) {
                std::vector<NameId> v;
                for (std::size_t k = 0; k < allowed.size(); ++k)
                    if (mask >> k & 1u) v.push_back(allowed[k]);
                std::sort(v.begin(), v.end());
                chosen[position(p, q)] = std::move(v);
                self(self, idx + 1);
                if (out.size() > max_names_)
                    throw Error(ErrorKind::BudgetExceeded, "universe exceeds " + std::to_string(max_names_) + " names");
            }
            assigned[q] = false;
            chosen[position(p, q)].clear();
        };
        rec(rec, 0);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return universe_memo_.emplace(std::make_pair(p, cutoff), std::move(out)).first->second;
}

struct FullModel::Scope {
    std::vector<std::pair<std::string, NameId>> stack; // names based at the current node
};

bool FullModel::subset(std::size_t p, NameId x, NameId y) {
    for (std::size_t q : cones_[p]) {
        const auto &yq = at(y, q);
        for (NameId z : at(x, q))
            if (!std::binary_search(yq.begin(), yq.end(), z)) return false;
    }
    return true;
}

bool FullModel::run(std::size_t p, const FormulaNode &f, Scope &s, std::uint32_t cutoff) {
    auto look = [&](const Term &t) -> NameId {
        if (!t.is_var()) return canonical(t.value, p);
        for (auto it = s.stack.rbegin(); it != s.stack.rend(); ++it)
            if (it->first == t.name) return it->second;
        throw Error(ErrorKind::UnboundVariable, "variable '" + t.name + "' has no name");
    };
    auto moved = [&](std::size_t q) {
        Scope t = s;
        for (auto &e : t.stack) e.second = restrict(e.second, q);
        return t;
    };
    switch (f.kind) {
    case FKind::Falsum: return false;
    case FKind::Eq: return look(f.lhs) == look(f.rhs);
    case FKind::In: {
        const auto &v = at(look(f.rhs), p);
        return std::binary_search(v.begin(), v.end(), look(f.lhs));
    }
    case FKind::And: return run(p, *f.a, s, cutoff) && run(p, *f.b, s, cutoff);
    case FKind::Or: return run(p, *f.a, s, cutoff) || run(p, *f.b, s, cutoff);
    case FKind::Imp:
        for (std::size_t q : cones_[p]) {
            Scope t = moved(q);
            if (run(q, *f.a, t, cutoff) && !run(q, *f.b, t, cutoff)) return false;
        }
        return true;
    case FKind::UForall:
    case FKind::BForall:
    case FKind::SubForall:
        for (std::size_t q : cones_[p]) {
            Scope t = moved(q);
            std::vector<NameId> dom;
            if (f.kind == FKind::BForall) {
                dom = at(restrict(look(f.bound), q), q);
            } else {
                dom = universe(q, cutoff);
                if (f.kind == FKind::SubForall) {
                    const NameId b = restrict(look(f.bound), q);
                    std::erase_if(dom, [&](NameId d) { return !subset(q, d, b); });
                }
            }
            t.stack.emplace_back(f.var, 0);
            for (NameId d : dom) {
                t.stack.back().second = d;
                if (!run(q, *f.a, t, cutoff)) return false;
            }
        }
        return true;
    case FKind::UExists:
    case FKind::BExists:
    case FKind::SubExists: {
        std::vector<NameId> dom;
        if (f.kind == FKind::BExists) {
            dom = at(look(f.bound), p);
        } else {
            dom = universe(p, cutoff);
            if (f.kind == FKind::SubExists) {
                const NameId b = look(f.bound);
                std::erase_if(dom, [&](NameId d) { return !subset(p, d, b); });
            }
        }
        s.stack.emplace_back(f.var, 0);
        bool found = false;
        for (NameId d : dom) {
            s.stack.back().second = d;
            if ((found = run(p, *f.a, s, cutoff))) break;
        }
        s.stack.pop_back();
        return found;
    }
    }
    return false;
}

bool FullModel::forces(std::size_t p, const Formula &f, const Params &params, std::uint32_t cutoff) {
    Scope s;
    for (const auto &[k, g] : params) s.stack.emplace_back(k, restrict(g, p));
    return run(p, *f, s, cutoff);
}

std::string FullModel::to_string(NameId g) const {
    std::ostringstream os;
    const Data &d = data_.at(g);
    os << "n" << g << "@" << frame_.names[d.base] << "{";
    for (std::size_t k = 0; k < d.graph.size(); ++k) {
        if (k) os << ", ";
        os << frame_.names[cones_[d.base][k]] << ": [";
        for (std::size_t i = 0; i < d.graph[k].size(); ++i) os << (i ? " " : "") << "n" << d.graph[k][i];
        os << "]";
    }
    os << "}";
    return os.str();
}

nlohmann::json FullModel::to_json(NameId g) const {
    const Data &d = data_.at(g);
    nlohmann::json j;
    j["id"] = g;
    j["base"] = frame_.names[d.base];
    j["stage"] = d.stage;
    for (std::size_t k = 0; k < d.graph.size(); ++k) j["graph"][frame_.names[cones_[d.base][k]]] = d.graph[k];
    return j;
}

NameId delta_component(FullModel &m, NameId alpha, std::size_t n) {
    const std::size_t b = m.base(alpha);
    return m.name_union(m.canonical(numeral(static_cast<std::uint32_t>(n)), b), m.name_succ(alpha));
}

NameId delta_encode(FullModel &m, const std::vector<bool> &bits, NameId alpha) {
    NameId acc = m.canonical(HFSet(), m.base(alpha));
    for (std::size_t n = 0; n < bits.size(); ++n) {
        const NameId c = delta_component(m, alpha, n);
        acc = m.name_union(acc, bits[n] ? m.name_succ(c) : c);
    }
    return acc;
}

std::vector<bool> delta_decode(FullModel &m, NameId delta, NameId alpha, std::size_t n_max) {
    const Formula member = f_in(Term::var("c"), Term::var("d"));
    const std::size_t root = m.base(delta);
    std::vector<bool> bits;
    for (std::size_t n = 0; n < n_max; ++n)
        bits.push_back(m.forces(root, member, {{"c", delta_component(m, alpha, n)}, {"d", delta}}, 1));
    return bits;
}

} // namespace hfl
