// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hfl/acceptance.hpp"
#include "hfl/compiler.hpp"
#include "hfl/erec.hpp"
#include "hfl/full_model.hpp"
#include "hfl/hierarchy.hpp"
#include "hfl/kripke.hpp"
#include "hfl/oracle.hpp"
#include "hfl/realize.hpp"

namespace {

using json = nlohmann::json;
using namespace hfl;

constexpr int kExitOk = 0, kExitViolation = 1, kExitUsage = 2, kExitBudget = 3;
constexpr int kIndexTableVersion = 1, kGrammarVersion = 1;

struct Globals {
    std::size_t budget_elems = Budget{}.max_elements;
    std::size_t budget_depth = 3;
    std::uint64_t fuel = 100'000;
    std::uint64_t seed = AcceptanceOptions{}.seed;
    std::string format = "json";

    Budget budget() const {
        Budget b;
        b.max_elements = budget_elems;
        return b;
    }
};

struct Report {
    json results = json::object();
    std::vector<std::string> violations;
    std::string summary;
    json timing = json::object();
};

// Everything a report depends on besides the flags: the contents of input files.
std::vector<std::string> &inputs_read() {
    static std::vector<std::string> v;
    return v;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    inputs_read().push_back(ss.str());
    return ss.str();
}

// 64-bit FNV-1a over the command and the input files, in read order.
std::string inputs_digest(const std::string &command) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto feed = [&h](const std::string &s) {
        for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ull;
        h = (h ^ 0xff) * 0x100000001b3ull; // separator
    };
    feed(command);
    for (const auto &s : inputs_read()) feed(s);
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n"), e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split_vars(const std::string &s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string v; std::getline(ss, v, ',');)
        if (!trim(v).empty()) out.push_back(trim(v));
    return out;
}

// name=SET pairs
std::map<std::string, HFSet, std::less<>> parse_bindings(const std::vector<std::string> &items) {
    std::map<std::string, HFSet, std::less<>> out;
    for (const auto &item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "expected name=SET, got '" + item + "'");
        out[trim(item.substr(0, eq))] = parse_set(trim(item.substr(eq + 1)));
    }
    return out;
}

// Large literals are replaced by their size.
json literal(HFSet x) {
    std::string s = to_string(x);
    if (s.size() > 100'000) return {{"elements", x.size()}, {"omitted", "literal longer than 100000 characters"}};
    return s;
}

json budgets_json(const Globals &g) {
    const Budget b = g.budget();
    return {{"elements", b.max_elements},        {"applications", b.max_applications},
            {"result_size", b.max_result_size},  {"depth", g.budget_depth},
            {"fuel", g.fuel}};
}

void emit(const Globals &g, const std::string &command, const Report &r, const std::string &error = {}) {
    json j;
    j["command"] = command;
    j["inputs_digest"] = inputs_digest(command);
    j["seed"] = g.seed;
    j["budgets"] = budgets_json(g);
    j["versions"] = {{"index_table", kIndexTableVersion}, {"grammar", kGrammarVersion}};
    j["results"] = r.results;
    j["violations"] = r.violations;
    if (!error.empty()) j["error"] = error;
    j["timing"] = r.timing;
    if (g.format == "text") {
        std::cout << command << "\n";
        for (const auto &[k, v] : r.results.items()) std::cout << "  " << k << ": " << v.dump() << "\n";
        for (const auto &v : r.violations) std::cout << "  violation: " << v << "\n";
        if (!error.empty()) std::cout << "  error: " << error << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    std::cerr << (r.summary.empty() ? (error.empty() ? "done" : error) : r.summary) << " (seed " << g.seed << ")\n";
}

Report cmd_compile(const std::string &formula, const std::string &vars, std::size_t separation) {
    const Formula f = parse_formula(formula);
    const auto vs = split_vars(vars);
    const CompilationResult c = separation ? compile_separation(f, separation, vs) : compile_comprehension(f, vs);
    Report r;
    r.results = {{"formula", to_string(f)},        {"classification", to_string(classify(f))},
                 {"term", to_sexpr(c.term)},       {"arguments", c.arguments},
                 {"depth", term_depth(c.term)},    {"size", term_size(c.term)},
                 {"stage_bound", c.stage_bound},   {"fundamental_only", uses_only_fundamental(c.term)}};
    r.summary = "compiled to a term of depth " + std::to_string(term_depth(c.term));
    return r;
}

Report cmd_sep(const std::string &formula, const std::string &vars, std::size_t index, const std::string &domain,
               const std::vector<std::string> &args) {
    const Formula f = parse_formula(formula);
    const auto vs = split_vars(vars);
    const CompilationResult c = compile_separation(f, index, vs);
    std::vector<HFSet> others;
    for (const auto &a : args) others.push_back(parse_set(a));
    const HFSet dom = parse_set(domain);
    if (others.size() + 1 != vs.size())
        throw Error(ErrorKind::InvalidArgument, "need one --arg per variable other than the separated one");
    const HFSet got = eval_term(c.term, separation_env(c, dom, others));
    Env env;
    for (std::size_t k = 0, o = 0; k < vs.size(); ++k)
        if (k + 1 != index) env.assignment[vs[k]] = others[o++];
    std::vector<HFSet> want;
    for (HFSet x : dom) {
        env.assignment[vs[index - 1]] = x;
        if (eval_formula(f, env)) want.push_back(x);
    }
    Report r;
    r.results = {{"term", to_sexpr(c.term)}, {"value", literal(got)}, {"oracle", literal(HFSet::of(want))}};
    if (got != HFSet::of(want)) r.violations.push_back("separation term disagrees with the oracle");
    r.summary = "separation value " + to_string(got);
    return r;
}

Report cmd_eval_term(const std::string &term, const std::vector<std::string> &env) {
    const OpTerm t = parse_term(term);
    TermEnv e;
    for (const auto &[k, v] : parse_bindings(env)) e[k] = v;
    const HFSet v = eval_term(t, e);
    Report r;
    r.results = {{"term", to_sexpr(t)}, {"value", literal(v)}, {"depth", term_depth(t)}};
    r.summary = "value " + to_string(v);
    return r;
}

Report cmd_oracle_eval(const std::string &formula, const std::vector<std::string> &env, const std::string &universe) {
    const Formula f = parse_formula(formula);
    Env e;
    e.assignment = parse_bindings(env);
    if (!universe.empty()) e.universe_bound = parse_set(universe);
    const bool v = eval_formula(f, e);
    Report r;
    r.results = {{"formula", to_string(f)}, {"classification", to_string(classify(f))}, {"value", v}};
    r.summary = std::string("formula is ") + (v ? "true" : "false");
    return r;
}

Report cmd_oracle_compr(const std::string &formula, const std::string &vars, const std::vector<std::string> &args) {
    const Formula f = parse_formula(formula);
    std::vector<HFSet> a;
    for (const auto &s : args) a.push_back(parse_set(s));
    const HFSet v = comprehension(f, split_vars(vars), a);
    Report r;
    r.results = {{"formula", to_string(f)}, {"value", literal(v)}, {"size", v.size()}};
    r.summary = "comprehension has " + std::to_string(v.size()) + " elements";
    return r;
}

Report cmd_hier_ll(const Globals &g, std::uint32_t alpha) {
    Report r;
    json stages = json::array();
    for (std::uint32_t a = 0; a <= alpha; ++a) {
        HFSet l;
        try {
            l = ll_level(a, g.budget());
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::StageTooLarge && e.kind() != ErrorKind::BudgetExceeded) throw;
            r.results["partial"] = true;
            r.summary = "stage " + std::to_string(a) + " is beyond the budget";
            throw std::pair<Report, std::string>(r, e.what());
        }
        stages.push_back({{"alpha", a}, {"size", l.size()}, {"rank", l.rank()}});
        r.results["stages"] = stages;
        if (a == alpha) r.results["value"] = literal(l);
    }
    r.summary = "L_" + std::to_string(alpha) + " has " + stages.back()["size"].dump() + " elements";
    return r;
}

Report cmd_hier_defclose(const Globals &g, const std::string &file, std::uint32_t n) {
    const HFSet b = parse_set(trim(read_file(file)));
    const auto it = def_iterates(b, n, g.budget());
    Report r;
    json sizes = json::array();
    HFSet acc;
    for (HFSet x : it) {
        sizes.push_back(x.size());
        acc = set_union(acc, x);
    }
    r.results = {{"base", literal(b)}, {"iterate_sizes", sizes}, {"value", literal(acc)}};
    if (it.size() < n + 1) {
        r.results["stopped_at"] = it.size() - 1;
        r.summary = "budget reached after " + std::to_string(it.size() - 1) + " iterates";
        r.results["partial"] = true;
        throw std::pair<Report, std::string>(r, "BudgetExceeded: iterate " + std::to_string(it.size()) +
                                                    " exceeds the element budget");
    }
    r.summary = "truncated closure has " + std::to_string(acc.size()) + " elements";
    return r;
}

Report cmd_hier_defsubsets(const Globals &g, const std::string &file) {
    const HFSet m = parse_set(trim(read_file(file)));
    const DefSubsetsReport d = def_subsets(m, static_cast<std::uint32_t>(g.budget_depth));
    const HFSet all = powerset(m);
    Report r;
    r.results = {{"set", literal(m)},
                 {"depth", g.budget_depth},
                 {"formulas_examined", d.formulas_examined},
                 {"definable", literal(d.subsets)},
                 {"definable_count", d.subsets.size()},
                 {"subset_count", all.size()},
                 {"all_subsets_definable", d.subsets == all}};
    if (!is_subset(d.subsets, all)) r.violations.push_back("a definable subset is not a subset");
    r.summary = std::to_string(d.subsets.size()) + " of " + std::to_string(all.size()) + " subsets definable";
    return r;
}

Report cmd_hier_alphastar(const Globals &g, std::uint32_t alpha) {
    const AlphaStarReport rep = alpha_star(numeral(alpha), g.budget());
    Report r;
    json non_ordinals = json::array();
    for (HFSet x : rep.non_ordinals) non_ordinals.push_back(to_string(x));
    json candidates = json::array();
    for (HFSet x : rep.candidates) candidates.push_back(to_string(x));
    r.results = {{"alpha", alpha},
                 {"alpha_star", to_string(rep.alpha_star)},
                 {"k", rep.k},
                 {"domain_index", literal(rep.domain_index)},
                 {"candidates", candidates},
                 {"non_ordinals", non_ordinals},
                 {"stages_equal", rep.stages_equal},
                 {"formula", alpha_star_formula_text()}};
    if (!rep.stages_equal) r.violations.push_back("stages differ");
    r.summary = "alpha* = " + to_string(rep.alpha_star);
    return r;
}

Report cmd_hier_witness(const Globals &g, std::uint32_t n) {
    const WitnessChain w = ll_membership_witness(n);
    const std::string err = verify_witness(w, g.budget());
    Report r;
    json steps = json::array();
    for (const auto &s : w.steps)
        steps.push_back({{"value", to_string(s.value)},
                         {"op", s.code ? op_name(*s.code) : "base"},
                         {"stage", s.stage},
                         {"args", s.code ? json::array({s.lhs, s.rhs}) : json::array()}});
    const std::uint32_t stage = w.steps[w.target].stage;
    r.results = {{"n", n}, {"stage", stage}, {"bound", 2 * n + 1}, {"valid", err.empty()}, {"steps", steps}};
    if (!err.empty()) r.violations.push_back(err);
    else if (stage > 2 * n + 1) r.violations.push_back("witness stage exceeds 2n+1");
    r.summary = std::to_string(n) + " in L_" + std::to_string(stage);
    return r;
}

Report cmd_kripke(const std::string &model, const std::string &formula, const std::string &node) {
    const KripkeModel m = model.empty() ? excluded_middle_counterexample() : load_model(model);
    const ValidationReport v = validate(m);
    Report r;
    r.results["validation"] = {{"valid", v.valid}, {"violations", v.violations}, {"notes", v.notes}};
    if (!v.valid) {
        for (const auto &s : v.violations) r.violations.push_back(s);
        r.summary = "model is not valid";
        return r;
    }
    const Formula f = parse_formula(formula);
    const Forcer forcer(m);
    json forced = json::object();
    for (std::size_t p = 0; p < m.frame.size(); ++p)
        if (node.empty() || m.frame.names[p] == node) forced[m.frame.names[p]] = forcer.forces(p, f);
    if (!node.empty()) m.frame.node(node);
    r.results["formula"] = to_string(f);
    r.results["forced"] = forced;
    r.summary = "forcing computed at " + std::to_string(forced.size()) + " nodes";
    return r;
}

Report cmd_fullmodel_build(const std::string &frame, std::uint32_t cutoff, bool dump) {
    FullModel m(frame.empty() ? two_node_chain() : frame_from_json(json::parse(read_file(frame))));
    Report r;
    json nodes = json::object();
    for (std::size_t p = 0; p < m.frame().size(); ++p) {
        const auto &u = m.universe(p, cutoff);
        json entry = {{"names", u.size()}};
        if (dump) {
            json names = json::array();
            for (NameId g : u) names.push_back(m.to_json(g));
            entry["graphs"] = names;
        }
        nodes[m.frame().names[p]] = entry;
    }
    r.results = {{"cutoff", cutoff}, {"nodes", nodes}, {"interned", m.name_count()}};
    r.summary = "built names below stage " + std::to_string(cutoff);
    return r;
}

Report cmd_fullmodel_delta(const std::string &bits_text) {
    std::vector<bool> bits;
    for (char c : bits_text) {
        if (c != '0' && c != '1') throw Error(ErrorKind::InvalidArgument, "bits must be 0 or 1");
        bits.push_back(c == '1');
    }
    FullModel m(two_node_chain());
    const NameId alpha = m.one_p(1);
    const NameId d = delta_encode(m, bits, alpha);
    const auto back = delta_decode(m, d, alpha, bits.size());
    std::string decoded;
    for (bool b : back) decoded += b ? '1' : '0';
    Report r;
    r.results = {{"bits", bits_text}, {"decoded", decoded}, {"code", m.to_json(d)}, {"alpha", m.to_json(alpha)}};
    if (decoded != bits_text) r.violations.push_back("decoded bits differ");
    r.summary = "decoded " + decoded;
    return r;
}

Report cmd_fullmodel_check(const Globals &g, const std::string &property) {
    static const std::map<std::string, std::vector<std::string>> keys{
        {"star", {"lemma_star"}}, {"onep", {"subset_of_one", "ordinal", "cone"}}, {"lem", {"lem_probe"}}};
    auto it = keys.find(property);
    if (it == keys.end()) throw Error(ErrorKind::InvalidArgument, "property must be star, onep or lem");
    AcceptanceOptions o;
    o.seed = g.seed;
    const CriterionResult c = run_criterion(7, o);
    Report r;
    for (const auto &k : it->second) {
        r.results[k] = c.details.value(k, json());
        if (c.details.value(k, json::object()).value("failures", 0) > 0) r.violations.push_back(k + " failed");
    }
    r.summary = property + ": " + (r.violations.empty() ? "all instances hold" : "violations found");
    return r;
}

Report cmd_erec_run(const Globals &g, const std::string &file, const std::string &expr, bool pmode) {
    const std::string text = expr.empty() ? read_file(file) : expr;
    const WTerm t = parse_wterm(trim(text));
    const Outcome o = eval_closed_term(t, g.fuel, pmode);
    Report r;
    r.results = {{"term", to_sexpr(t)}, {"pmode", pmode}, {"outcome", to_json(o)}};
    r.summary = to_string(o);
    return r;
}

Report cmd_realize_check(const Globals &g, const std::string &file, const std::string &realizer,
                         const std::string &formula, const std::string &variant, std::uint32_t rank,
                         const std::vector<std::string> &env) {
    const HFSet a = parse_set(trim(realizer.empty() ? read_file(file) : realizer));
    const Formula f = parse_formula(formula);
    RealizeOptions o;
    o.fuel = g.fuel;
    o.search = sets_of_rank_below(rank);
    Env e;
    e.assignment = parse_bindings(env);
    const Verdict v = check(variant_from_name(variant), a, f, e, o);
    Report r;
    r.results = {{"realizer", to_string(a)},
                 {"formula", to_string(f)},
                 {"variant", variant},
                 {"verdict", to_string(v)},
                 {"search", "sets of rank below " + std::to_string(rank) +
                                " stand in for the quantifiers over all sets"}};
    if (v.is(Verdict::Kind::Realized) && classify(f) != Classification::ContainsUnbounded && !eval_formula(f, e))
        r.violations.push_back("realized formula is false");
    r.summary = to_string(v);
    return r;
}

Report cmd_realize_audit(const Globals &g, const std::string &variant) {
    RealizeOptions o;
    o.fuel = g.fuel;
    const AuditReport rep = truth_audit(stock_realizability_corpus(), variant_from_name(variant), o);
    Report r;
    r.results = to_json(rep);
    for (const auto &e : rep.entries)
        if (e.violation) r.violations.push_back("realized but false: " + e.triple.label);
    r.summary = std::to_string(rep.entries.size()) + " triples, " + std::to_string(rep.violations) + " violations";
    return r;
}

Report cmd_suite(const Globals &g, int only) {
    AcceptanceOptions o;
    o.seed = g.seed;
    o.fuel = g.fuel;
    o.budget = g.budget();
    std::vector<CriterionResult> results;
    auto progress = [](const CriterionResult &c) { std::cerr << result_line(c) << "\n"; };
    if (only) {
        results.push_back(run_criterion(only, o));
        progress(results.back());
    } else {
        results = run_acceptance(o, progress);
    }
    Report r;
    r.results["criteria"] = json::array();
    std::size_t passed = 0;
    for (const auto &c : results) {
        json j = to_json(c);
        j.erase("seconds");
        r.results["criteria"].push_back(j);
        r.timing["criterion " + std::to_string(c.id)] = c.seconds;
        if (c.pass) ++passed;
        else r.violations.push_back("criterion " + std::to_string(c.id) + ": " + c.summary);
    }
    r.summary = std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria pass";
    return r;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"hfl: hereditarily finite constructible-hierarchy workbench"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--budget-elems", g.budget_elems, "largest stage or closure size")->capture_default_str();
    app.add_option("--budget-depth", g.budget_depth, "formula depth for definable-subset search")
        ->capture_default_str();
    app.add_option("--fuel", g.fuel, "fuel per VM run")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for every random choice")->capture_default_str();
    app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    std::function<Report()> action;
    auto on = [&](CLI::App *sub, std::function<Report()> fn) { sub->callback([&action, fn] { action = fn; }); };

    std::string formula, vars, domain, term, model, node, frame, bits, property, file, expr, realizer,
        variant = "wt", universe;
    std::vector<std::string> args, env;
    std::size_t index = 0;
    std::uint32_t alpha = 0, n = 0, cutoff = 2, rank = 4;
    bool pmode = false, paper_checks = false, dump = false;
    int criterion = 0;

    auto *compile = app.add_subcommand("compile", "compile a Σ0 formula to an operation term");
    compile->add_option("--formula", formula)->required();
    compile->add_option("--vars", vars, "comma separated variable order")->required();
    compile->add_option("--separation", index, "build the separation term for this 1-based position");
    on(compile, [&] { return cmd_compile(formula, vars, index); });

    auto *sep = app.add_subcommand("sep", "evaluate a separation term and compare with the oracle");
    sep->add_option("--formula", formula)->required();
    sep->add_option("--vars", vars)->required();
    sep->add_option("--index", index)->required()->check(CLI::PositiveNumber);
    sep->add_option("--domain", domain)->required();
    sep->add_option("--arg", args, "values of the other variables in order");
    on(sep, [&] { return cmd_sep(formula, vars, index, domain, args); });

    auto *evalt = app.add_subcommand("eval-term", "evaluate an operation term");
    evalt->add_option("--term", term)->required();
    evalt->add_option("--env", env, "name=SET");
    on(evalt, [&] { return cmd_eval_term(term, env); });

    auto *oracle = app.add_subcommand("oracle", "brute-force evaluation");
    oracle->require_subcommand(1);
    auto *oeval = oracle->add_subcommand("eval", "truth of a formula");
    oeval->add_option("--formula", formula)->required();
    oeval->add_option("--env", env, "name=SET");
    oeval->add_option("--universe", universe, "range of unbounded quantifiers");
    on(oeval, [&] { return cmd_oracle_eval(formula, env, universe); });
    auto *ocompr = oracle->add_subcommand("compr", "comprehension set over argument sets");
    ocompr->add_option("--formula", formula)->required();
    ocompr->add_option("--vars", vars)->required();
    ocompr->add_option("--arg", args, "one set per variable")->required();
    on(ocompr, [&] { return cmd_oracle_compr(formula, vars, args); });

    auto *hier = app.add_subcommand("hier", "constructible hierarchy");
    hier->require_subcommand(1);
    auto *ll = hier->add_subcommand("ll", "stages up to alpha");
    ll->add_option("--alpha", alpha)->required();
    on(ll, [&] { return cmd_hier_ll(g, alpha); });
    auto *defc = hier->add_subcommand("defclose", "union of the first n + 1 definable-closure iterates");
    defc->add_option("--set", file, "file with an HF literal")->required();
    defc->add_option("--n", n)->required();
    on(defc, [&] { return cmd_hier_defclose(g, file, n); });
    auto *defs = hier->add_subcommand("defsubsets", "subsets definable by formulas up to --budget-depth");
    defs->add_option("--set", file, "file with an HF literal")->required();
    on(defs, [&] { return cmd_hier_defsubsets(g, file); });
    auto *astar = hier->add_subcommand("alphastar", "alpha* and stage equality");
    astar->add_option("--alpha", alpha)->required();
    on(astar, [&] { return cmd_hier_alphastar(g, alpha); });
    auto *wit = hier->add_subcommand("witness", "membership witness chain for a numeral");
    wit->add_option("--n", n)->required();
    on(wit, [&] { return cmd_hier_witness(g, n); });

    auto *kripke = app.add_subcommand("kripke", "Kripke forcing");
    kripke->require_subcommand(1);
    auto *kcheck = kripke->add_subcommand("check", "forcing at every node");
    kcheck->add_option("--model", model, "model JSON (default: the two-node counterexample)");
    kcheck->add_option("--formula", formula)->required();
    kcheck->add_option("--node", node, "only this node");
    on(kcheck, [&] { return cmd_kripke(model, formula, node); });

    auto *kdump = kripke->add_subcommand("dump", "model JSON of the two-node counterexample");
    on(kdump, [] {
        Report r;
        r.results["model"] = model_to_json(excluded_middle_counterexample());
        r.summary = "two-node counterexample";
        return r;
    });

    auto *full = app.add_subcommand("fullmodel", "names over a frame");
    full->require_subcommand(1);
    auto *fbuild = full->add_subcommand("build", "names of stage below the cutoff at every node");
    fbuild->add_option("--frame", frame, "frame JSON (default: the two-node chain)");
    fbuild->add_option("--cutoff", cutoff)->capture_default_str();
    fbuild->add_flag("--dump", dump, "include every name graph");
    on(fbuild, [&] { return cmd_fullmodel_build(frame, cutoff, dump); });
    auto *fdelta = full->add_subcommand("delta", "encode and decode a bit string");
    fdelta->add_option("--bits", bits)->required();
    on(fdelta, [&] { return cmd_fullmodel_delta(bits); });
    auto *fcheck = full->add_subcommand("check", "name properties");
    fcheck->add_option("--property", property)->required()->check(CLI::IsMember({"star", "onep", "lem"}));
    on(fcheck, [&] { return cmd_fullmodel_check(g, property); });

    auto *erec = app.add_subcommand("erec", "E-recursion VM");
    erec->require_subcommand(1);
    auto *erun = erec->add_subcommand("run", "evaluate a closed application term");
    auto *term_file = erun->add_option("--term", file, "file with an s-expression");
    auto *term_expr = erun->add_option("--expr", expr, "s-expression text");
    term_file->excludes(term_expr);
    erun->add_flag("--pmode", pmode, "enable the powerset index");
    on(erun, [&] {
        if (file.empty() && expr.empty()) throw Error(ErrorKind::InvalidArgument, "give --term or --expr");
        return cmd_erec_run(g, file, expr, pmode);
    });
    auto *etable = erec->add_subcommand("table", "index table");
    on(etable, [] {
        Report r;
        r.results["indices"] = index_table_json();
        r.summary = std::to_string(kIndexCount) + " indices";
        return r;
    });

    auto *real = app.add_subcommand("realize", "realizability");
    real->require_subcommand(1);
    auto *rcheck = real->add_subcommand("check", "verdict for a realizer and a formula");
    auto *rfile = rcheck->add_option("--realizer", file, "file with an HF literal");
    auto *rtext = rcheck->add_option("--realizer-text", realizer, "HF literal");
    rfile->excludes(rtext);
    rcheck->add_option("--formula", formula)->required();
    rcheck->add_option("--variant", variant)->check(CLI::IsMember({"wt", "w", "wp"}))->capture_default_str();
    rcheck->add_option("--search-rank", rank, "search over sets of rank below this")
        ->check(CLI::Range(0, 4))
        ->capture_default_str();
    rcheck->add_option("--env", env, "name=SET");
    on(rcheck, [&] {
        if (file.empty() && realizer.empty())
            throw Error(ErrorKind::InvalidArgument, "give --realizer or --realizer-text");
        return cmd_realize_check(g, file, realizer, formula, variant, rank, env);
    });
    auto *raudit = real->add_subcommand("audit", "truth audit of the stock corpus");
    raudit->add_option("--variant", variant)->check(CLI::IsMember({"wt", "w", "wp"}))->capture_default_str();
    on(raudit, [&] { return cmd_realize_audit(g, variant); });

    auto *suite = app.add_subcommand("suite", "acceptance battery");
    suite->add_flag("--paper-checks", paper_checks, "run every acceptance criterion")->required();
    suite->add_option("--criterion", criterion, "run only this criterion")->check(CLI::Range(1, kCriterionCount));
    on(suite, [&] { return cmd_suite(g, criterion); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::string command;
    for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);
    try {
        const Report r = action();
        emit(g, command, r);
        return r.violations.empty() ? kExitOk : kExitViolation;
    } catch (const std::pair<Report, std::string> &partial) {
        emit(g, command, partial.first, partial.second);
        return kExitBudget;
    } catch (const Error &e) {
        emit(g, command, Report{}, e.what());
        const bool budget = e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::StageTooLarge;
        return budget ? kExitBudget : kExitUsage;
    }
}
