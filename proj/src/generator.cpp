// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <algorithm>

#include "hfl/hierarchy.hpp"

// Deciding t ∈ D^e(b) without enumerating D^e(b): each operation is inverted
// separately, so the cost is a few linear scans of b plus products of small
// candidate lists.

namespace hfl {

namespace {

using Span = std::span<const HFSet>;

bool includes(Span big, Span small) { return std::includes(big.begin(), big.end(), small.begin(), small.end()); }

bool disjoint(Span a, Span b) {
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return false;
        if (*i < *j) ++i;
        else ++j;
    }
    return true;
}

bool same(Span a, Span b) { return std::equal(a.begin(), a.end(), b.begin(), b.end()); }

struct Search {
    HFSet t;
    HFSet b;
    Span base;
    std::size_t work = 0;
    std::size_t cap;

    void charge(std::size_t n) {
        work += n;
        if (work > cap) throw Error(ErrorKind::BudgetExceeded, "generator search exceeded its work budget");
    }
    std::optional<Generator> found(OpCode c, HFSet x, HFSet y) const {
        // every answer is re-evaluated, so a bug in an inversion cannot produce a false witness
        if (eval_fund(c, x, y) != t) throw Error(ErrorKind::InvalidArgument, "generator inversion is inconsistent");
        return Generator{c, x, y};
    }
    std::vector<HFSet> supersets_of_target() {
        std::vector<HFSet> out;
        charge(base.size());
        for (HFSet x : base)
            if (x.size() >= t.size() && includes(x.elements(), t.elements())) out.push_back(x);
        return out;
    }

    std::optional<Generator> pair() const {
        auto e = t.elements();
        if (e.empty() || e.size() > 2) return std::nullopt;
        if (!b.contains(e.front()) || !b.contains(e.back())) return std::nullopt;
        return found(OpCode::Pair, e.front(), e.back());
    }

    std::optional<Generator> unary(OpCode c) {
        charge(base.size());
        for (HFSet x : base) {
            bool ok = true;
            if (c == OpCode::Union) {
                for (HFSet e : x)
                    if (!includes(t.elements(), e.elements())) { ok = false; break; }
            } else {
                for (HFSet e : x) {
                    auto p = as_pair(e);
                    if (p && !t.contains(c == OpCode::Dom ? p->first : p->second)) { ok = false; break; }
                }
            }
            if (ok && eval_fund(c, x, x) == t) return found(c, x, x);
        }
        return std::nullopt;
    }

    std::optional<Generator> diff(const std::vector<HFSet> &X) {
        for (HFSet x : X) {
            std::vector<HFSet> need;
            std::set_difference(x.begin(), x.end(), t.begin(), t.end(), std::back_inserter(need));
            charge(base.size());
            for (HFSet y : base)
                if (y.size() >= need.size() && includes(y.elements(), need) && disjoint(y.elements(), t.elements()))
                    return found(OpCode::Diff, x, y);
        }
        return std::nullopt;
    }

    std::optional<Generator> inter(const std::vector<HFSet> &X) {
        std::vector<HFSet> Y; // every element of y must contain all of t
        charge(base.size());
        for (HFSet y : base) {
            bool ok = true;
            for (HFSet w : y)
                if (!includes(w.elements(), t.elements())) { ok = false; break; }
            if (ok) Y.push_back(y);
        }
        for (HFSet x : X) {
            charge(Y.size());
            for (HFSet y : Y) {
                bool ok = true;
                for (HFSet z : x) {
                    if (t.contains(z)) continue;
                    bool cut = false;
                    for (HFSet w : y)
                        if (!w.contains(z)) { cut = true; break; }
                    if (!cut) { ok = false; break; }
                }
                if (ok) return found(OpCode::Inter, x, y);
            }
        }
        return std::nullopt;
    }

    std::optional<Generator> imp(const std::vector<HFSet> &X) {
        std::vector<std::pair<HFSet, std::pair<HFSet, HFSet>>> P;
        charge(base.size());
        for (HFSet y : base)
            if (auto p = as_pair(y)) P.push_back({y, *p});
        for (HFSet x : X) {
            charge(P.size());
            for (const auto &[y, cd] : P) {
                bool ok = true;
                for (HFSet z : x) {
                    const bool kept = !cd.first.contains(z) || cd.second.contains(z);
                    if (kept != t.contains(z)) { ok = false; break; }
                }
                if (ok) return found(OpCode::Imp, x, y);
            }
        }
        return std::nullopt;
    }

    std::optional<Generator> times() const {
        std::vector<HFSet> d, r;
        for (HFSet e : t) {
            auto p = as_pair(e);
            if (!p) return std::nullopt;
            d.push_back(p->first);
            r.push_back(p->second);
        }
        HFSet x = HFSet::of(std::move(d)), y = HFSet::of(std::move(r));
        if (x.size() * y.size() != t.size() || !b.contains(x) || !b.contains(y)) return std::nullopt;
        return found(OpCode::Times, x, y);
    }

    std::optional<Generator> triples(OpCode c) {
        std::vector<HFSet> pairs, ws;
        for (HFSet e : t) {
            auto outer = as_pair(e);
            if (!outer) return std::nullopt;
            auto inner = as_pair(outer->second);
            if (!inner) return std::nullopt;
            // Abc: <a, <b, w>>; Acb: <a, <w, b>>
            const HFSet bb = c == OpCode::Abc ? inner->first : inner->second;
            const HFSet w = c == OpCode::Abc ? inner->second : inner->first;
            pairs.push_back(kuratowski_pair(outer->first, bb));
            ws.push_back(w);
        }
        HFSet D = HFSet::of(std::move(pairs)), y = HFSet::of(std::move(ws));
        if (D.size() * y.size() != t.size() || !b.contains(y)) return std::nullopt;
        charge(base.size());
        for (HFSet x : base) {
            if (x.size() < D.size() || !includes(x.elements(), D.elements())) continue;
            bool ok = true;
            for (HFSet e : x)
                if (!D.contains(e) && is_pair(e)) { ok = false; break; }
            if (ok) return found(c, x, y);
        }
        return std::nullopt;
    }

    std::optional<Generator> eq() {
        std::vector<HFSet> diag;
        for (HFSet e : t) {
            auto p = as_pair(e);
            if (!p || p->first != p->second) return std::nullopt;
            diag.push_back(p->first);
        }
        HFSet D = HFSet::of(std::move(diag));
        std::vector<HFSet> S;
        charge(base.size());
        for (HFSet s : base)
            if (includes(s.elements(), D.elements())) S.push_back(s);
        for (HFSet x : S) {
            charge(S.size());
            for (HFSet y : S) {
                std::size_t common = 0;
                auto i = x.begin(), j = y.begin();
                while (i != x.end() && j != y.end()) {
                    if (*i == *j) { ++common; ++i; ++j; }
                    else if (*i < *j) ++i;
                    else ++j;
                }
                if (common == D.size()) return found(OpCode::Eq, x, y);
            }
        }
        return std::nullopt;
    }

    std::optional<Generator> in() {
        std::vector<HFSet> us, vs;
        for (HFSet e : t) {
            auto p = as_pair(e);
            if (!p || !p->first.contains(p->second)) return std::nullopt;
            vs.push_back(p->first);
            us.push_back(p->second);
        }
        HFSet U = HFSet::of(std::move(us)), V = HFSet::of(std::move(vs));
        std::vector<HFSet> X, Y;
        charge(base.size());
        for (HFSet s : base) {
            if (includes(s.elements(), U.elements())) X.push_back(s);
            if (includes(s.elements(), V.elements())) Y.push_back(s);
        }
        for (HFSet y : Y)
            for (HFSet x : X) {
                charge(1);
                bool ok = true;
                for (HFSet v : y) {
                    for (HFSet u : x)
                        if (v.contains(u) && !t.contains(kuratowski_pair(v, u))) { ok = false; break; }
                    if (!ok) break;
                }
                // U ⊆ x and V ⊆ y give every pair of t, so no extra pair means equality
                if (ok) return found(OpCode::In, x, y);
            }
        return std::nullopt;
    }

    std::optional<Generator> forall() {
        // t = {x"{z} | z ∈ y}. Off-domain z contribute 0.
        const bool zero_ok = t.contains(HFSet());
        std::vector<std::pair<HFSet, std::vector<HFSet>>> img;
        for (HFSet x : base) {
            charge(x.size() + 1);
            img.clear();
            for (HFSet e : x) {
                auto p = as_pair(e);
                if (!p) continue;
                auto it = std::find_if(img.begin(), img.end(), [&](auto &q) { return q.first == p->first; });
                if (it == img.end()) img.push_back({p->first, {p->second}});
                else it->second.push_back(p->second);
            }
            // which z are usable, and which element of t each yields
            std::vector<std::pair<HFSet, int>> usable; // (z, index in t) for domain z
            std::vector<HFSet> bad;
            std::vector<bool> cover(t.size(), false);
            for (auto &[z, vals] : img) {
                std::sort(vals.begin(), vals.end());
                vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
                int hit = -1;
                for (std::size_t k = 0; k < t.size(); ++k)
                    if (same(t.elements()[k].elements(), vals)) { hit = static_cast<int>(k); break; }
                if (hit < 0) bad.push_back(z);
                else { usable.push_back({z, hit}); cover[hit] = true; }
            }
            for (std::size_t k = 0; k < t.size(); ++k)
                if (t.elements()[k].is_empty() && zero_ok) cover[k] = true;
            if (!std::all_of(cover.begin(), cover.end(), [](bool c) { return c; })) continue;
            std::sort(bad.begin(), bad.end());
            charge(base.size());
            for (HFSet y : base) {
                if (!disjoint(y.elements(), bad)) continue;
                std::vector<bool> got(t.size(), false);
                bool ok = true;
                for (HFSet z : y) {
                    auto u = std::find_if(usable.begin(), usable.end(), [&](auto &q) { return q.first == z; });
                    if (u != usable.end()) got[u->second] = true;
                    else if (!zero_ok) { ok = false; break; }
                    else got[std::lower_bound(t.begin(), t.end(), HFSet()) - t.begin()] = true;
                }
                if (ok && std::all_of(got.begin(), got.end(), [](bool g) { return g; })) return found(OpCode::Forall, x, y);
            }
        }
        return std::nullopt;
    }
};

} // namespace

std::optional<Generator> find_generator(HFSet target, HFSet b, const Budget &budget) {
    Search s{target, b, b.elements(), 0, budget.max_applications};
    if (b.is_empty()) return std::nullopt;
    if (target.is_empty()) return s.found(OpCode::Diff, b.elements().front(), b.elements().front());
    if (auto g = s.pair()) return g;
    if (auto g = s.times()) return g;
    for (OpCode c : {OpCode::Abc, OpCode::Acb})
        if (auto g = s.triples(c)) return g;
    for (OpCode c : {OpCode::Union, OpCode::Dom, OpCode::Ran})
        if (auto g = s.unary(c)) return g;
    if (auto g = s.eq()) return g;
    if (auto g = s.in()) return g;
    const std::vector<HFSet> X = s.supersets_of_target();
    if (auto g = s.diff(X)) return g;
    if (auto g = s.inter(X)) return g;
    if (auto g = s.imp(X)) return g;
    return s.forall();
}

bool in_d_small(HFSet target, HFSet b, const Budget &budget) {
    return b.contains(target) || find_generator(target, b, budget).has_value();
}

bool in_d_closure(HFSet target, HFSet b, const Budget &budget) {
    return in_d_small(target, insert(b, b), budget);
}

} // namespace hfl
