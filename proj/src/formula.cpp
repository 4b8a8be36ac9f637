// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "hfl/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace hfl {

namespace {

std::shared_ptr<FormulaNode> node(FKind k) {
    auto n = std::make_shared<FormulaNode>();
    n->kind = k;
    return n;
}

} // namespace

Formula f_false() { return node(FKind::Falsum); }

Formula f_eq(Term l, Term r) {
    auto n = node(FKind::Eq);
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

Formula f_in(Term l, Term r) {
    auto n = node(FKind::In);
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

namespace {
Formula binary(FKind k, Formula a, Formula b) {
    auto n = node(k);
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}
} // namespace

Formula f_and(Formula a, Formula b) { return binary(FKind::And, std::move(a), std::move(b)); }
Formula f_or(Formula a, Formula b) { return binary(FKind::Or, std::move(a), std::move(b)); }
Formula f_imp(Formula a, Formula b) { return binary(FKind::Imp, std::move(a), std::move(b)); }

Formula f_quant(FKind kind, std::string var, Term bound, Formula body) {
    if (!is_bounded_quant(kind)) throw Error(ErrorKind::InvalidArgument, "f_quant needs a bounded quantifier kind");
    auto n = node(kind);
    n->var = std::move(var);
    n->bound = std::move(bound);
    n->a = std::move(body);
    return n;
}

Formula f_uquant(FKind kind, std::string var, Formula body) {
    if (kind != FKind::UForall && kind != FKind::UExists)
        throw Error(ErrorKind::InvalidArgument, "f_uquant needs an unbounded quantifier kind");
    auto n = node(kind);
    n->var = std::move(var);
    n->a = std::move(body);
    return n;
}

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok { Ident, Literal, Amp, Bar, Arrow, Tilde, LParen, RParen, Dot, Equals, End };

struct Token {
    Tok kind;
    std::string text;
    HFSet value;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view t) : m_t(t) { advance(); }
    const Token &peek() const { return m_cur; }
    Token take() {
        Token t = m_cur;
        advance();
        return t;
    }

private:
    void advance() {
        while (m_pos < m_t.size() && std::isspace(static_cast<unsigned char>(m_t[m_pos]))) ++m_pos;
        const std::size_t start = m_pos;
        if (m_pos >= m_t.size()) {
            m_cur = {Tok::End, "", HFSet(), start};
            return;
        }
        const char c = m_t[m_pos];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (m_pos < m_t.size() &&
                   (std::isalnum(static_cast<unsigned char>(m_t[m_pos])) || m_t[m_pos] == '_'))
                ++m_pos;
            m_cur = {Tok::Ident, std::string(m_t.substr(start, m_pos - start)), HFSet(), start};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '{' || c == '<') {
            HFSet v = parse_set_at(m_t, m_pos);
            m_cur = {Tok::Literal, std::string(m_t.substr(start, m_pos - start)), v, start};
            return;
        }
        ++m_pos;
        switch (c) {
        case '&': m_cur = {Tok::Amp, "&", HFSet(), start}; return;
        case '|': m_cur = {Tok::Bar, "|", HFSet(), start}; return;
        case '~': m_cur = {Tok::Tilde, "~", HFSet(), start}; return;
        case '(': m_cur = {Tok::LParen, "(", HFSet(), start}; return;
        case ')': m_cur = {Tok::RParen, ")", HFSet(), start}; return;
        case '.': m_cur = {Tok::Dot, ".", HFSet(), start}; return;
        case '=': m_cur = {Tok::Equals, "=", HFSet(), start}; return;
        case '-':
            if (m_pos < m_t.size() && m_t[m_pos] == '>') {
                ++m_pos;
                m_cur = {Tok::Arrow, "->", HFSet(), start};
                return;
            }
            break;
        default: break;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }

    std::string_view m_t;
    std::size_t m_pos = 0;
    Token m_cur;
};

bool is_keyword(const std::string &s) {
    return s == "all" || s == "some" || s == "All" || s == "Some" || s == "in" || s == "sub" || s == "false";
}

class Parser {
public:
    explicit Parser(std::string_view t) : m_lex(t) {}

    Formula parse_all() {
        Formula f = imp();
        if (m_lex.peek().kind != Tok::End) throw SyntaxError("unexpected '" + m_lex.peek().text + "'", m_lex.peek().pos);
        return f;
    }

private:
    Formula imp() {
        Formula lhs = disj();
        if (m_lex.peek().kind == Tok::Arrow) {
            const std::size_t p = m_lex.take().pos;
            auto n = std::const_pointer_cast<FormulaNode>(f_imp(lhs, imp()));
            n->pos = p;
            return n;
        }
        return lhs;
    }

    Formula disj() {
        Formula lhs = conj();
        while (m_lex.peek().kind == Tok::Bar) {
            const std::size_t p = m_lex.take().pos;
            auto n = std::const_pointer_cast<FormulaNode>(f_or(lhs, conj()));
            n->pos = p;
            lhs = n;
        }
        return lhs;
    }

    Formula conj() {
        Formula lhs = unary();
        while (m_lex.peek().kind == Tok::Amp) {
            const std::size_t p = m_lex.take().pos;
            auto n = std::const_pointer_cast<FormulaNode>(f_and(lhs, unary()));
            n->pos = p;
            lhs = n;
        }
        return lhs;
    }

    Formula unary() {
        const Token &t = m_lex.peek();
        const std::size_t p = t.pos;
        if (t.kind == Tok::Tilde) {
            m_lex.take();
            auto n = std::const_pointer_cast<FormulaNode>(f_not(unary()));
            n->pos = p;
            return n;
        }
        if (t.kind == Tok::LParen) {
            m_lex.take();
            Formula f = imp();
            expect(Tok::RParen, ")");
            return f;
        }
        if (t.kind == Tok::Ident) {
            if (t.text == "false") {
                m_lex.take();
                auto n = std::const_pointer_cast<FormulaNode>(f_false());
                n->pos = p;
                return n;
            }
            if (t.text == "all" || t.text == "some") return bounded_quant();
            if (t.text == "All" || t.text == "Some") {
                const bool forall = m_lex.take().text == "All";
                std::string v = variable();
                expect(Tok::Dot, ".");
                auto n = std::const_pointer_cast<FormulaNode>(
                    f_uquant(forall ? FKind::UForall : FKind::UExists, v, imp()));
                n->pos = p;
                return n;
            }
        }
        return atom();
    }

    Formula bounded_quant() {
        const Token q = m_lex.take();
        const bool forall = q.text == "all";
        std::string v = variable();
        const Token rel = m_lex.take();
        FKind kind;
        if (rel.kind == Tok::Ident && rel.text == "in") kind = forall ? FKind::BForall : FKind::BExists;
        else if (rel.kind == Tok::Ident && rel.text == "sub") kind = forall ? FKind::SubForall : FKind::SubExists;
        else throw SyntaxError("expected 'in' or 'sub'", rel.pos);
        Term bound = term();
        expect(Tok::Dot, ".");
        auto n = std::const_pointer_cast<FormulaNode>(f_quant(kind, v, bound, imp()));
        n->pos = q.pos;
        return n;
    }

    Formula atom() {
        const std::size_t p = m_lex.peek().pos;
        Term l = term();
        const Token rel = m_lex.take();
        Formula f;
        if (rel.kind == Tok::Equals) f = f_eq(l, term());
        else if (rel.kind == Tok::Ident && rel.text == "in") f = f_in(l, term());
        else throw SyntaxError("expected 'in' or '='", rel.pos);
        auto n = std::const_pointer_cast<FormulaNode>(f);
        n->pos = p;
        return n;
    }

    Term term() {
        const Token t = m_lex.take();
        if (t.kind == Tok::Literal) return Term::constant(t.value);
        if (t.kind == Tok::Ident && !is_keyword(t.text)) return Term::var(t.text);
        throw SyntaxError("expected a variable or set literal", t.pos);
    }

    std::string variable() {
        const Token t = m_lex.take();
        if (t.kind == Tok::Ident && !is_keyword(t.text)) return t.text;
        throw SyntaxError("expected a variable", t.pos);
    }

    void expect(Tok k, const char *what) {
        const Token t = m_lex.take();
        if (t.kind != k) throw SyntaxError(std::string("expected '") + what + "'", t.pos);
    }

    Lexer m_lex;
};

// ---------------------------------------------------------------- printing

std::string term_string(const Term &t) { return t.is_var() ? t.name : to_string(t.value); }

const char *quant_word(FKind k) {
    switch (k) {
    case FKind::BForall: return "all";
    case FKind::BExists: return "some";
    case FKind::SubForall: return "all";
    case FKind::SubExists: return "some";
    case FKind::UForall: return "All";
    case FKind::UExists: return "Some";
    default: return "?";
    }
}

// ctx: 1 top/implication rhs/quantifier body, 2 implication lhs and
// disjunction lhs, 3 disjunction rhs and conjunction lhs, 4 conjunction rhs
// and negation operand.
void print(const Formula &f, int ctx, std::string &out) {
    auto wrap = [&](bool need, auto &&body) {
        if (need) out += '(';
        body();
        if (need) out += ')';
    };
    switch (f->kind) {
    case FKind::Falsum: out += "false"; return;
    case FKind::Eq: out += term_string(f->lhs) + " = " + term_string(f->rhs); return;
    case FKind::In: out += term_string(f->lhs) + " in " + term_string(f->rhs); return;
    case FKind::Imp:
        if (f->b->kind == FKind::Falsum) {
            out += '~';
            print(f->a, 4, out);
            return;
        }
        wrap(ctx > 1, [&] {
            print(f->a, 2, out);
            out += " -> ";
            print(f->b, 1, out);
        });
        return;
    case FKind::Or:
        wrap(ctx > 2, [&] {
            print(f->a, 2, out);
            out += " | ";
            print(f->b, 3, out);
        });
        return;
    case FKind::And:
        wrap(ctx > 3, [&] {
            print(f->a, 3, out);
            out += " & ";
            print(f->b, 4, out);
        });
        return;
    default: break;
    }
    wrap(ctx > 1, [&] {
        out += quant_word(f->kind);
        out += ' ';
        out += f->var;
        if (f->kind == FKind::BForall || f->kind == FKind::BExists) out += " in " + term_string(f->bound);
        else if (f->kind == FKind::SubForall || f->kind == FKind::SubExists) out += " sub " + term_string(f->bound);
        out += ". ";
        print(f->a, 1, out);
    });
}

// ---------------------------------------------------------------- traversal

void collect_names(const Formula &f, std::set<std::string> &names) {
    auto addTerm = [&](const Term &t) {
        if (t.is_var()) names.insert(t.name);
    };
    if (is_atom(f->kind)) {
        addTerm(f->lhs);
        addTerm(f->rhs);
        return;
    }
    if (f->kind == FKind::Falsum) return;
    if (is_quant(f->kind)) {
        names.insert(f->var);
        if (is_bounded_quant(f->kind)) addTerm(f->bound);
        collect_names(f->a, names);
        return;
    }
    collect_names(f->a, names);
    collect_names(f->b, names);
}

void free_rec(const Formula &f, std::vector<std::string> &bound, std::vector<std::string> &out) {
    auto addTerm = [&](const Term &t) {
        if (!t.is_var()) return;
        if (std::find(bound.begin(), bound.end(), t.name) != bound.end()) return;
        if (std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
    };
    if (is_atom(f->kind)) {
        addTerm(f->lhs);
        addTerm(f->rhs);
        return;
    }
    if (f->kind == FKind::Falsum) return;
    if (is_quant(f->kind)) {
        if (is_bounded_quant(f->kind)) addTerm(f->bound);
        bound.push_back(f->var);
        free_rec(f->a, bound, out);
        bound.pop_back();
        return;
    }
    free_rec(f->a, bound, out);
    free_rec(f->b, bound, out);
}

using Renaming = std::map<std::string, Term>;

Term apply(const Term &t, const Renaming &r) {
    if (!t.is_var()) return t;
    auto it = r.find(t.name);
    return it == r.end() ? t : it->second;
}

// Rebuilds f with the substitution r; binders are renamed when they clash with
// names in `scope` (free variables plus enclosing binders).
Formula rebuild(const Formula &f, const Renaming &r, std::set<std::string> scope, std::set<std::string> &all) {
    auto n = std::make_shared<FormulaNode>(*f);
    if (is_atom(f->kind)) {
        n->lhs = apply(f->lhs, r);
        n->rhs = apply(f->rhs, r);
        return n;
    }
    if (f->kind == FKind::Falsum) return n;
    if (is_quant(f->kind)) {
        if (is_bounded_quant(f->kind)) n->bound = apply(f->bound, r);
        std::string v = f->var;
        if (scope.count(v)) {
            for (int k = 1;; ++k) {
                std::string cand = f->var + "_" + std::to_string(k);
                if (!all.count(cand) && !scope.count(cand)) {
                    v = cand;
                    break;
                }
            }
            all.insert(v);
        }
        Renaming inner = r;
        if (v != f->var) inner[f->var] = Term::var(v);
        else inner.erase(f->var);
        n->var = v;
        scope.insert(v);
        n->a = rebuild(f->a, inner, scope, all);
        return n;
    }
    n->a = rebuild(f->a, r, scope, all);
    n->b = rebuild(f->b, r, scope, all);
    return n;
}

} // namespace

Formula normalize(const Formula &f) {
    std::set<std::string> all;
    collect_names(f, all);
    const auto fv = free_vars(f);
    return rebuild(f, {}, std::set<std::string>(fv.begin(), fv.end()), all);
}

Formula parse_formula(std::string_view text) { return normalize(Parser(text).parse_all()); }

std::string to_string(const Formula &f) {
    std::string out;
    print(f, 1, out);
    return out;
}

const char *to_string(Classification c) {
    switch (c) {
    case Classification::Sigma0: return "Sigma0";
    case Classification::Sigma0P: return "Sigma0P";
    case Classification::ContainsUnbounded: return "ContainsUnbounded";
    }
    return "?";
}

Classification classify(const Formula &f) {
    switch (f->kind) {
    case FKind::Falsum:
    case FKind::Eq:
    case FKind::In: return Classification::Sigma0;
    case FKind::UForall:
    case FKind::UExists: return Classification::ContainsUnbounded;
    case FKind::SubForall:
    case FKind::SubExists: return std::max(Classification::Sigma0P, classify(f->a));
    case FKind::BForall:
    case FKind::BExists: return classify(f->a);
    default: return std::max(classify(f->a), classify(f->b));
    }
}

Formula relativize(const Formula &f, const Term &bound) {
    // Rename binders that would capture the bound variable first.
    Formula g = f;
    if (bound.is_var()) {
        std::set<std::string> all;
        collect_names(f, all);
        std::set<std::string> scope{bound.name};
        for (const auto &v : free_vars(f)) scope.insert(v);
        g = rebuild(f, {}, scope, all);
    }
    struct Rec {
        const Term &bound;
        Formula operator()(const Formula &h) const {
            if (is_atom(h->kind) || h->kind == FKind::Falsum) return h;
            auto n = std::make_shared<FormulaNode>(*h);
            if (h->kind == FKind::UForall || h->kind == FKind::UExists) {
                n->kind = h->kind == FKind::UForall ? FKind::BForall : FKind::BExists;
                n->bound = bound;
            }
            n->a = (*this)(h->a);
            if (h->b) n->b = (*this)(h->b);
            return n;
        }
    };
    return Rec{bound}(g);
}

std::vector<std::string> free_vars(const Formula &f) {
    std::vector<std::string> bound, out;
    free_rec(f, bound, out);
    return out;
}

Formula substitute(const Formula &f, const std::string &var, HFSet value) {
    std::set<std::string> all;
    collect_names(f, all);
    const auto fv = free_vars(f);
    return rebuild(f, {{var, Term::constant(value)}}, std::set<std::string>(fv.begin(), fv.end()), all);
}

std::size_t depth(const Formula &f) {
    if (is_atom(f->kind) || f->kind == FKind::Falsum) return 0;
    if (is_quant(f->kind)) return 1 + depth(f->a);
    return 1 + std::max(depth(f->a), depth(f->b));
}

bool same(const Formula &a, const Formula &b) {
    if (a->kind != b->kind) return false;
    if (is_atom(a->kind)) return a->lhs == b->lhs && a->rhs == b->rhs;
    if (a->kind == FKind::Falsum) return true;
    if (is_quant(a->kind)) {
        if (a->var != b->var) return false;
        if (is_bounded_quant(a->kind) && !(a->bound == b->bound)) return false;
        return same(a->a, b->a);
    }
    return same(a->a, b->a) && same(a->b, b->b);
}

} // namespace hfl
