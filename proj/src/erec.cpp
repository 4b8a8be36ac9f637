// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "hfl/erec.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace hfl {

namespace {

struct IndexInfo {
    const char *name;
    std::size_t arity;
};
constexpr std::array<IndexInfo, kIndexCount> kInfo{{
    {"k", 2}, {"s", 3}, {"p", 2}, {"p0", 1}, {"p1", 1}, {"sN", 1}, {"pN", 1}, {"dN", 4}, {"0bar", 1},
    {"omegabar", 1}, {"pi", 2}, {"nu", 1}, {"gamma", 2}, {"rho", 2}, {"i1", 3}, {"i2", 3}, {"i3", 3}, {"pbar", 1},
}};

constexpr std::size_t kMaxNesting = 10'000;

// Evaluation state shared by every nested application of one run.
struct Machine {
    std::uint64_t fuel;
    bool pmode;
    std::uint64_t spent = 0;
    std::size_t depth = 0;
    Outcome::Kind failure = Outcome::Kind::Value;
    std::string detail;

    Machine(std::uint64_t f, bool p) : fuel(f), pmode(p) {}

    std::optional<HFSet> fail(Outcome::Kind k, std::string d = {}) {
        failure = k;
        detail = std::move(d);
        return std::nullopt;
    }

    struct Nest {
        Machine &m;
        explicit Nest(Machine &mm) : m(mm) { ++m.depth; }
        ~Nest() { --m.depth; }
    };

    std::optional<HFSet> apply(HFSet e, HFSet x);
    std::optional<HFSet> eval(const WTerm &t);

    Outcome finish(std::optional<HFSet> v) const {
        Outcome o;
        o.spent = spent;
        if (v) {
            o.value = *v;
        } else {
            o.kind = failure;
            o.detail = detail;
        }
        return o;
    }
};

std::optional<HFSet> Machine::apply(HFSet e, HFSet x) {
    if (depth > kMaxNesting) return fail(Outcome::Kind::Timeout, "nesting depth");
    for (;;) {
        if (spent >= fuel) return fail(Outcome::Kind::Timeout);
        ++spent;
        std::vector<HFSet> args;
        HFSet head = e;
        while (auto pr = as_pair(head)) {
            args.push_back(pr->second);
            head = pr->first;
            if (args.size() > 4) break;
        }
        const auto idx = index_from_value(head);
        if (!idx) return fail(Outcome::Kind::ApplyError, "not an index state: " + to_string(e));
        const std::size_t n = index_arity(*idx);
        if (args.size() >= n) return fail(Outcome::Kind::ApplyError, "over-applied state: " + to_string(e));
        std::reverse(args.begin(), args.end());
        args.push_back(x);
        if (args.size() < n) return kuratowski_pair(e, x);

        const auto &a = args;
        switch (*idx) {
        case Index::K: return a[0];
        case Index::S: {
            std::optional<HFSet> u, v;
            {
                Nest guard(*this);
                u = apply(a[0], a[2]);
                if (!u) return u;
                v = apply(a[1], a[2]);
                if (!v) return v;
            }
            e = *u;
            x = *v;
            continue; // tail position: loop instead of recursing
        }
        case Index::P: return kuratowski_pair(a[0], a[1]);
        case Index::P0:
        case Index::P1: {
            auto pr = as_pair(a[0]);
            if (!pr) return fail(Outcome::Kind::ApplyError, "projection of a non-pair");
            return *idx == Index::P0 ? pr->first : pr->second;
        }
        case Index::SN: {
            auto v = as_numeral(a[0]);
            if (!v) return fail(Outcome::Kind::ApplyError, "sN on a non-numeral");
            return numeral(*v + 1);
        }
        case Index::PN: {
            auto v = as_numeral(a[0]);
            if (!v) return fail(Outcome::Kind::ApplyError, "pN on a non-numeral");
            return numeral(*v == 0 ? 0 : *v - 1);
        }
        case Index::DN: {
            auto l = as_numeral(a[0]), r = as_numeral(a[1]);
            if (!l || !r) return fail(Outcome::Kind::ApplyError, "dN on a non-numeral");
            return *l == *r ? a[2] : a[3];
        }
        case Index::Zero: return HFSet();
        case Index::Omega: return fail(Outcome::Kind::NonFinitary, "omega is not hereditarily finite");
        case Index::Pi: return HFSet::of({a[0], a[1]});
        case Index::Nu: return union_all(a[0]);
        case Index::Gamma: {
            std::vector<HFSet> out;
            for (HFSet z : a[0])
                if (std::all_of(a[1].begin(), a[1].end(), [&](HFSet w) { return w.contains(z); })) out.push_back(z);
            return HFSet::of_sorted(std::move(out));
        }
        case Index::Rho: {
            std::vector<HFSet> out;
            Nest guard(*this);
            for (HFSet u : canonical_elements(a[1])) {
                auto r = apply(a[0], u);
                if (!r) {
                    if (failure == Outcome::Kind::ApplyError) detail = "rho: " + detail;
                    return r;
                }
                out.push_back(*r);
            }
            return HFSet::of(std::move(out));
        }
        case Index::I1: return a[2].contains(a[1]) ? a[0] : HFSet();
        case Index::I2:
        case Index::I3: {
            std::vector<HFSet> out;
            for (HFSet u : a[0]) {
                const bool then = *idx == Index::I2 ? a[2].contains(u) : u.contains(a[2]);
                if (!a[1].contains(u) || then) out.push_back(u);
            }
            return HFSet::of_sorted(std::move(out));
        }
        case Index::Pow:
            if (!pmode) return fail(Outcome::Kind::ApplyError, "powerset index outside powerset mode");
            try {
                return powerset(a[0]);
            } catch (const Error &err) {
                return fail(Outcome::Kind::ApplyError, std::string("powerset: ") + err.what());
            }
        }
        return fail(Outcome::Kind::ApplyError, "unhandled index");
    }
}

std::optional<HFSet> Machine::eval(const WTerm &t) {
    switch (t->kind) {
    case WTermNode::Kind::Idx: return index_value(t->idx);
    case WTermNode::Kind::Const: return t->value;
    case WTermNode::Kind::Var: throw Error(ErrorKind::InvalidArgument, "term has the variable " + t->var);
    case WTermNode::Kind::App: {
        if (depth > kMaxNesting) return fail(Outcome::Kind::Timeout, "nesting depth");
        Nest guard(*this);
        auto f = eval(t->f);
        if (!f) return f;
        auto a = eval(t->a);
        if (!a) return a;
        return apply(*f, *a);
    }
    }
    return std::nullopt;
}

WTerm node(WTermNode n) { return std::make_shared<const WTermNode>(std::move(n)); }

struct SexprParser {
    std::string_view s;
    std::size_t pos = 0;

    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void error(const std::string &msg) const {
        throw SyntaxError(msg, pos);
    }
    void expect(char c) {
        ws();
        if (pos >= s.size() || s[pos] != c) error(std::string("expected '") + c + "'");
        ++pos;
    }
    std::string word() {
        ws();
        const std::size_t start = pos;
        while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) && s[pos] != '(' && s[pos] != ')')
            ++pos;
        if (start == pos) error("expected a word");
        return std::string(s.substr(start, pos - start));
    }
    WTerm term() {
        expect('(');
        const std::string head = word();
        WTerm out;
        if (head == "idx") {
            const std::string n = word();
            auto i = index_from_name(n);
            if (!i) error("unknown index '" + n + "'");
            out = w_idx(*i);
        } else if (head == "var") {
            out = w_var(word());
        } else if (head == "const") {
            ws();
            out = w_const(parse_set_at(s, pos));
        } else if (head == "app") {
            out = term();
            ws();
            if (pos < s.size() && s[pos] == ')') error("app needs an argument");
            while (ws(), pos < s.size() && s[pos] != ')') out = w_app(out, term());
        } else {
            error("unknown term head '" + head + "'");
        }
        expect(')');
        return out;
    }
};

} // namespace

HFSet index_value(Index i) { return numeral(static_cast<std::uint32_t>(i)); }
const char *index_name(Index i) { return kInfo[static_cast<std::size_t>(i) - 1].name; }
std::size_t index_arity(Index i) { return kInfo[static_cast<std::size_t>(i) - 1].arity; }

std::optional<Index> index_from_name(std::string_view name) {
    for (std::uint32_t k = 0; k < kIndexCount; ++k)
        if (name == kInfo[k].name) return static_cast<Index>(k + 1);
    return std::nullopt;
}

std::optional<Index> index_from_value(HFSet x) {
    auto n = as_numeral(x);
    if (!n || *n == 0 || *n > kIndexCount) return std::nullopt;
    return static_cast<Index>(*n);
}

nlohmann::json index_table_json() {
    nlohmann::json j = nlohmann::json::array();
    for (std::uint32_t k = 0; k < kIndexCount; ++k)
        j.push_back({{"name", kInfo[k].name}, {"numeral", k + 1}, {"arity", kInfo[k].arity}});
    return j;
}

const char *to_string(Outcome::Kind k) {
    switch (k) {
    case Outcome::Kind::Value: return "Value";
    case Outcome::Kind::Timeout: return "Timeout";
    case Outcome::Kind::NonFinitary: return "NonFinitary";
    case Outcome::Kind::ApplyError: return "ApplyError";
    }
    return "?";
}

std::string to_string(const Outcome &o) {
    std::string s = to_string(o.kind);
    if (o.ok()) s += "(" + to_string(o.value) + ")";
    else if (!o.detail.empty()) s += "(" + o.detail + ")";
    return s + " spent " + std::to_string(o.spent);
}

nlohmann::json to_json(const Outcome &o) {
    nlohmann::json j{{"kind", to_string(o.kind)}, {"spent", o.spent}};
    if (o.ok()) j["value"] = to_string(o.value);
    if (!o.detail.empty()) j["detail"] = o.detail;
    return j;
}

Outcome apply(HFSet e, HFSet x, std::uint64_t fuel, bool pmode) {
    Machine m(fuel, pmode);
    return m.finish(m.apply(e, x));
}

Outcome apply_n(HFSet e, const std::vector<HFSet> &args, std::uint64_t fuel, bool pmode) {
    Machine m(fuel, pmode);
    std::optional<HFSet> cur = e;
    for (HFSet x : args) {
        cur = m.apply(*cur, x);
        if (!cur) break;
    }
    return m.finish(cur);
}

WTerm w_idx(Index i) {
    WTermNode n;
    n.kind = WTermNode::Kind::Idx;
    n.idx = i;
    return node(std::move(n));
}
WTerm w_var(std::string name) {
    WTermNode n;
    n.kind = WTermNode::Kind::Var;
    n.var = std::move(name);
    return node(std::move(n));
}
WTerm w_const(HFSet v) {
    WTermNode n;
    n.value = v;
    return node(std::move(n));
}
WTerm w_app(WTerm f, WTerm a) {
    WTermNode n;
    n.kind = WTermNode::Kind::App;
    n.f = std::move(f);
    n.a = std::move(a);
    return node(std::move(n));
}
WTerm w_app(WTerm f, std::initializer_list<WTerm> args) {
    for (const auto &a : args) f = w_app(f, a);
    return f;
}

bool occurs(const WTerm &t, std::string_view var) {
    switch (t->kind) {
    case WTermNode::Kind::Var: return t->var == var;
    case WTermNode::Kind::App: return occurs(t->f, var) || occurs(t->a, var);
    default: return false;
    }
}

bool is_closed(const WTerm &t) {
    switch (t->kind) {
    case WTermNode::Kind::Var: return false;
    case WTermNode::Kind::App: return is_closed(t->f) && is_closed(t->a);
    default: return true;
    }
}

WTerm parse_wterm(std::string_view text) {
    SexprParser p{text};
    WTerm t = p.term();
    p.ws();
    if (p.pos != text.size()) p.error("trailing input");
    return t;
}

std::string to_sexpr(const WTerm &t) {
    switch (t->kind) {
    case WTermNode::Kind::Idx: return std::string("(idx ") + index_name(t->idx) + ")";
    case WTermNode::Kind::Var: return "(var " + t->var + ")";
    case WTermNode::Kind::Const: return "(const " + to_string(t->value) + ")";
    case WTermNode::Kind::App: return "(app " + to_sexpr(t->f) + " " + to_sexpr(t->a) + ")";
    }
    return "";
}

Outcome eval_closed_term(const WTerm &t, std::uint64_t fuel, bool pmode) {
    if (!is_closed(t)) throw Error(ErrorKind::InvalidArgument, "term is not closed");
    Machine m(fuel, pmode);
    return m.finish(m.eval(t));
}

WTerm w_identity() { return w_app(w_idx(Index::S), {w_idx(Index::K), w_idx(Index::K)}); }

WTerm w_divergent() {
    const WTerm sii = w_app(w_idx(Index::S), {w_identity(), w_identity()});
    return w_app(sii, sii);
}

WTerm abstract(std::string_view var, const WTerm &t) {
    if (!occurs(t, var)) return w_app(w_idx(Index::K), t);
    if (t->kind == WTermNode::Kind::Var) return w_identity();
    if (t->a->kind == WTermNode::Kind::Var && !occurs(t->f, var)) return t->f;
    return w_app(w_idx(Index::S), {abstract(var, t->f), abstract(var, t->a)});
}

std::vector<SeparationEntry> separation_catalog() {
    const WTerm a = w_var("a"), b = w_var("b"), zero = w_const(HFSet());
    auto i = [](Index k) { return w_idx(k); };
    auto lam = [](const WTerm &body) { return abstract("a", abstract("b", body)); };
    const WTerm succ_a = w_app(i(Index::Nu), {w_app(i(Index::Pi), {a, w_app(i(Index::Pi), {a, a})})});
    return {
        {"member", "u in a", lam(w_app(i(Index::I2), {b, b, a}))},
        {"contains", "a in u", lam(w_app(i(Index::I3), {b, b, a}))},
        {"non-member", "~ u in a", lam(w_app(i(Index::I2), {b, a, zero}))},
        {"guard", "0 in a", lam(w_app(i(Index::I1), {b, zero, a}))},
        {"union-member", "some w in a. u in w", lam(w_app(i(Index::I2), {b, b, w_app(i(Index::Nu), {a})}))},
        {"all-members", "all w in a. u in w", lam(w_app(i(Index::Gamma), {b, a}))},
        {"successor-member", "u in a | u = a", lam(w_app(i(Index::I2), {b, b, succ_a}))},
    };
}

} // namespace hfl
