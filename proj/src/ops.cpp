// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "hfl/ops.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace hfl {

namespace {
constexpr std::array<const char *, 17> kNames = {"pair", "inter", "union", "diff", "times", "imp",
                                                  "forall", "dom", "ran", "abc", "acb", "eq",
                                                  "in", "g0", "g1", "g2", "g3"};
}

const char *op_name(OpCode c) { return kNames[static_cast<std::size_t>(c)]; }

OpCode op_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (name == kNames[i]) return static_cast<OpCode>(i);
    throw Error(ErrorKind::InvalidArgument, "unknown operation '" + std::string(name) + "'");
}

HFSet eval_fund(OpCode code, HFSet x, HFSet y) {
    switch (code) {
    case OpCode::Pair: return HFSet::of({x, y});
    case OpCode::Inter: {
        // {z in x | for all w in y, z in w}; y = 0 leaves x unchanged
        std::vector<HFSet> out;
        for (HFSet z : x) {
            bool all = true;
            for (HFSet w : y)
                if (!w.contains(z)) { all = false; break; }
            if (all) out.push_back(z);
        }
        return HFSet::of_sorted(std::move(out));
    }
    case OpCode::Union: return union_all(x);
    case OpCode::Diff: return set_difference(x, y);
    case OpCode::Times: return product(x, y);
    case OpCode::Imp: {
        auto p = as_pair(y);
        if (!p) return HFSet();
        std::vector<HFSet> out;
        for (HFSet z : x)
            if (!p->first.contains(z) || p->second.contains(z)) out.push_back(z);
        return HFSet::of_sorted(std::move(out));
    }
    case OpCode::Forall: {
        std::vector<HFSet> out;
        for (HFSet z : y) out.push_back(image(x, z));
        return HFSet::of(std::move(out));
    }
    case OpCode::Dom: return domain(x);
    case OpCode::Ran: return range(x);
    case OpCode::Abc:
    case OpCode::Acb: {
        std::vector<HFSet> out;
        for (HFSet e : x) {
            auto p = as_pair(e);
            if (!p) continue;
            for (HFSet w : y)
                out.push_back(code == OpCode::Abc ? make_tuple({p->first, p->second, w})
                                                  : make_tuple({p->first, w, p->second}));
        }
        return HFSet::of(std::move(out));
    }
    case OpCode::Eq:
    case OpCode::In: {
        // pairs <v,u> with v in y, u in x
        std::vector<HFSet> out;
        for (HFSet v : y)
            for (HFSet u : x)
                if (code == OpCode::Eq ? u == v : v.contains(u)) out.push_back(kuratowski_pair(v, u));
        return HFSet::of(std::move(out));
    }
    default: break;
    }
    throw Error(ErrorKind::InvalidArgument, std::string("eval_fund needs a binary code, got ") + op_name(code));
}

HFSet eval_aux_g(OpCode code, HFSet x, HFSet y, HFSet z) {
    switch (code) {
    case OpCode::G0: return kuratowski_pair(x, y);
    case OpCode::G1: return image(x, y);
    case OpCode::G2: return make_tuple({x, y, z});
    case OpCode::G3: return HFSet::of({x, kuratowski_pair(y, z)});
    default: break;
    }
    throw Error(ErrorKind::InvalidArgument, std::string("eval_aux_g needs a ternary code, got ") + op_name(code));
}

OpTerm var_term(std::string name) {
    auto n = std::make_shared<OpTermNode>();
    n->kind = OpTermNode::Kind::Var;
    n->name = std::move(name);
    return n;
}

OpTerm const_term(HFSet value) {
    auto n = std::make_shared<OpTermNode>();
    n->kind = OpTermNode::Kind::Const;
    n->value = value;
    return n;
}

OpTerm app(OpCode code, OpTerm x, OpTerm y) {
    if (arity(code) != 2) throw Error(ErrorKind::InvalidArgument, std::string(op_name(code)) + " takes 3 arguments");
    auto n = std::make_shared<OpTermNode>();
    n->kind = OpTermNode::Kind::App2;
    n->code = code;
    n->args = {std::move(x), std::move(y), nullptr};
    return n;
}

OpTerm app(OpCode code, OpTerm x, OpTerm y, OpTerm z) {
    if (arity(code) != 3) throw Error(ErrorKind::InvalidArgument, std::string(op_name(code)) + " takes 2 arguments");
    auto n = std::make_shared<OpTermNode>();
    n->kind = OpTermNode::Kind::App3;
    n->code = code;
    n->args = {std::move(x), std::move(y), std::move(z)};
    return n;
}

OpTerm expand_g1(OpTerm x, OpTerm y) {
    OpTerm sy = app(OpCode::Pair, y, y);
    OpTerm prod = app(OpCode::Times, sy, app(OpCode::Ran, x, x));
    return app(OpCode::Ran, app(OpCode::Inter, x, app(OpCode::Pair, prod, prod)), x);
}

namespace {

using Memo = std::unordered_map<const OpTermNode *, HFSet>;

HFSet eval_rec(const OpTerm &t, const TermEnv &env, Memo &memo) {
    switch (t->kind) {
    case OpTermNode::Kind::Var: {
        auto it = env.find(t->name);
        if (it == env.end()) throw Error(ErrorKind::UnboundVariable, "variable '" + t->name + "' is not bound");
        return it->second;
    }
    case OpTermNode::Kind::Const: return t->value;
    default: break;
    }
    if (auto it = memo.find(t.get()); it != memo.end()) return it->second;
    HFSet r;
    if (t->kind == OpTermNode::Kind::App2)
        r = eval_fund(t->code, eval_rec(t->args[0], env, memo), eval_rec(t->args[1], env, memo));
    else
        r = eval_aux_g(t->code, eval_rec(t->args[0], env, memo), eval_rec(t->args[1], env, memo),
                       eval_rec(t->args[2], env, memo));
    memo.emplace(t.get(), r);
    return r;
}

std::size_t depth_rec(const OpTerm &t, std::unordered_map<const OpTermNode *, std::size_t> &memo) {
    if (t->kind == OpTermNode::Kind::Var || t->kind == OpTermNode::Kind::Const) return 0;
    if (auto it = memo.find(t.get()); it != memo.end()) return it->second;
    std::size_t d = 0;
    for (const auto &a : t->args)
        if (a) d = std::max(d, depth_rec(a, memo));
    memo.emplace(t.get(), d + 1);
    return d + 1;
}

template <class F> void visit(const OpTerm &t, std::unordered_set<const OpTermNode *> &seen, F &&f) {
    if (!seen.insert(t.get()).second) return;
    f(*t);
    for (const auto &a : t->args)
        if (a) visit(a, seen, f);
}

void sexpr_rec(const OpTerm &t, std::string &out) {
    switch (t->kind) {
    case OpTermNode::Kind::Var: out += "(var " + t->name + ")"; return;
    case OpTermNode::Kind::Const: out += "(const " + to_string(t->value) + ")"; return;
    default: break;
    }
    out += '(';
    out += op_name(t->code);
    for (const auto &a : t->args) {
        if (!a) continue;
        out += ' ';
        sexpr_rec(a, out);
    }
    out += ')';
}

struct SexprParser {
    std::string_view t;
    std::size_t pos = 0;

    void ws() {
        while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    }
    std::string atom() {
        ws();
        std::size_t start = pos;
        while (pos < t.size() && (std::isalnum(static_cast<unsigned char>(t[pos])) || t[pos] == '_')) ++pos;
        if (start == pos) throw SyntaxError("expected a name", pos);
        return std::string(t.substr(start, pos - start));
    }
    void expect(char c) {
        ws();
        if (pos >= t.size() || t[pos] != c) throw SyntaxError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    OpTerm term() {
        expect('(');
        const std::size_t headPos = pos;
        std::string head = atom();
        OpTerm r;
        if (head == "var") {
            r = var_term(atom());
        } else if (head == "const") {
            r = const_term(parse_set_at(t, pos));
        } else {
            OpCode code;
            try {
                code = op_from_name(head);
            } catch (const Error &) {
                throw SyntaxError("unknown operation '" + head + "'", headPos);
            }
            OpTerm a = term(), b = term();
            r = arity(code) == 2 ? app(code, a, b) : app(code, a, b, term());
        }
        expect(')');
        return r;
    }
};

} // namespace

HFSet eval_term(const OpTerm &t, const TermEnv &env) {
    Memo memo;
    return eval_rec(t, env, memo);
}

std::size_t term_depth(const OpTerm &t) {
    std::unordered_map<const OpTermNode *, std::size_t> memo;
    return depth_rec(t, memo);
}

std::size_t term_size(const OpTerm &t) {
    std::unordered_set<const OpTermNode *> seen;
    std::size_t n = 0;
    visit(t, seen, [&](const OpTermNode &node) {
        if (node.kind == OpTermNode::Kind::App2 || node.kind == OpTermNode::Kind::App3) ++n;
    });
    return n;
}

bool uses_only_fundamental(const OpTerm &t) {
    std::unordered_set<const OpTermNode *> seen;
    bool ok = true;
    visit(t, seen, [&](const OpTermNode &node) {
        if (node.kind == OpTermNode::Kind::App3) ok = false;
    });
    return ok;
}

std::string to_sexpr(const OpTerm &t) {
    std::string out;
    sexpr_rec(t, out);
    return out;
}

OpTerm parse_term(std::string_view text) {
    SexprParser p{text};
    OpTerm r = p.term();
    p.ws();
    if (p.pos != text.size()) throw SyntaxError("trailing input", p.pos);
    return r;
}

} // namespace hfl
