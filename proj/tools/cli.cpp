#include "cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "kpi/brute.hpp"
#include "kpi/checks.hpp"
#include "kpi/errors.hpp"
#include "kpi/io.hpp"
#include "kpi/normalize.hpp"
#include "kpi/parser.hpp"
#include "kpi/pic.hpp"
#include "kpi/tableau.hpp"

namespace kpi::cli {

namespace {

struct FileError : Error {
    using Error::Error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot read " + path + ": " + std::strerror(errno));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Cnf load_kb(const std::string& path, bool whole_formula, std::size_t cnf_budget) {
    std::string text = slurp(path);
    if (!whole_formula) return parse_kb(text, cnf_budget);
    std::string stripped;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) stripped += line.substr(0, line.find('#')) + "\n";
    return to_cnf(parse(stripped), cnf_budget);
}

std::vector<std::string> split_vars(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string v; std::getline(ss, v, ',');)
        if (!v.empty()) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct CompileOpts {
    std::string kb;
    bool json = false;
    bool text = false;
    bool trace = false;
    bool formula = false;
    std::size_t max_iter = 20;
    std::size_t clause_budget = 20000;
    std::size_t node_budget = kDefaultTableauNodeBudget;
    std::string rules = "extended";
};

int compile(const CompileOpts& o, std::ostream& out, std::ostream& err) {
    Cnf u = load_kb(o.kb, o.formula, o.clause_budget);
    PicConfig cfg;
    cfg.max_iterations = o.max_iter;
    cfg.clause_budget = o.clause_budget;
    cfg.tableau_node_budget = o.node_budget;
    cfg.rules = rule_set_from_string(o.rules);
    cfg.keep_derivations = o.trace;
    PicResult r = prime_implicates(u, cfg);
    if (o.text) {
        out << "# " << r.prime_implicates.size() << " prime implicates, " << r.iterations << " iterations, "
            << (r.converged ? "converged" : "not converged") << "\n";
        for (const auto& c : r.prime_implicates) out << c.key() << "\n";
    } else {
        out << to_json(r).dump(2) << "\n";
    }
    if (o.trace)
        for (const auto& st : r.trace)
            for (const auto& d : st.derivations) err << to_json(d).dump() << "\n";
    if (!r.converged) {
        err << "kpi: no fixpoint after " << r.iterations << " iterations (raise --max-iter)\n";
        return BudgetHit;
    }
    return Ok;
}

int query(const std::string& compiled, const std::string& clause_text, std::size_t node_budget, std::ostream& out,
          std::ostream& err) {
    Json j;
    try {
        j = Json::parse(slurp(compiled));
    } catch (const Json::parse_error& e) {
        throw FileError(compiled + ": " + e.what());
    }
    auto pi = prime_implicates_from_json(j);
    if (j.contains("converged") && j["converged"] == false)
        err << "kpi: " << compiled << " is not a converged compilation; false answers may be wrong\n";
    Clause q = parse_clause(clause_text);
    EntailmentOracle oracle(node_budget);
    if (auto d = answer_query(pi, q, oracle)) {
        out << "true " << d->key() << "\n";
        return Ok;
    }
    out << "false\n";
    return False;
}

int prove(const std::string& formula, std::size_t node_budget, std::ostream& out) {
    SatResult r = satisfiable(parse(formula), node_budget);
    if (!r) {
        out << "UNSAT\n";
        return False;
    }
    Json m = to_json(r.model);
    m["root"] = r.world;
    out << "SAT\n" << m.dump(2) << "\n";
    return Ok;
}

int oracle(const std::string& kb, bool formula, const std::string& vars, std::size_t depth, std::size_t width,
           std::ostream& out) {
    Cnf u = load_kb(kb, formula, 10000);
    ClauseSpace space{split_vars(vars), depth, width};
    Json pis = Json::array();
    for (const auto& c : prime_implicates_brute(u, space)) pis.push_back(to_json(c));
    Json j{{"prime_implicates", std::move(pis)},
           {"space", {{"vars", space.vocab}, {"depth", depth}, {"width", width}}}};
    out << j.dump(2) << "\n";
    return Ok;
}

int selftest(double scale, std::uint64_t seed, std::ostream& out) {
    checks::Scale s;
    s.factor = scale;
    s.seed = seed;
    bool all = true;
    for (const auto& r : checks::run_all(s)) {
        all = all && r.passed();
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures
            << " failures";
        if (r.skipped) out << ", " << r.skipped << " skipped";
        out << std::fixed << std::setprecision(2) << " (" << r.seconds << "s)\n";
        for (const auto& n : r.notes) out << "    " << n << "\n";
    }
    return all ? Ok : False;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Prime implicates of modal K knowledge bases", "kpi"};
    app.require_subcommand(1);

    CompileOpts co;
    auto* c = app.add_subcommand("compile", "compute the prime implicates of a knowledge base");
    c->add_option("kb", co.kb, "knowledge base file, one formula per line")->required();
    auto* jf = c->add_flag("--json", co.json, "JSON output (default)");
    c->add_flag("--text", co.text, "one clause per line")->excludes(jf);
    c->add_flag("--trace", co.trace, "write derivations of new clauses to stderr as JSON lines");
    c->add_flag("--formula", co.formula, "read the file as a single formula");
    c->add_option("--max-iter", co.max_iter, "iteration cap")->check(CLI::PositiveNumber);
    c->add_option("--clause-budget", co.clause_budget, "clause count cap per stage")->check(CLI::PositiveNumber);
    c->add_option("--node-budget", co.node_budget, "tableau node cap per entailment check")
        ->check(CLI::PositiveNumber);
    c->add_option("--rules", co.rules, "rule set")->check(CLI::IsMember({"extended", "basic"}));

    std::string compiled, clause_text;
    std::size_t node_budget = kDefaultTableauNodeBudget;
    auto* q = app.add_subcommand("query", "answer a clause query from a compiled file");
    q->add_option("compiled", compiled, "output of compile --json")->required();
    q->add_option("--clause", clause_text, "query clause")->required();
    q->add_option("--node-budget", node_budget, "tableau node cap")->check(CLI::PositiveNumber);

    std::string formula;
    auto* p = app.add_subcommand("prove", "decide satisfiability, printing a model when there is one");
    p->add_option("formula", formula, "formula text")->required();
    p->add_option("--node-budget", node_budget, "tableau node cap")->check(CLI::PositiveNumber);

    std::string okb, vars;
    bool oformula = false;
    std::size_t depth = 0, width = 2;
    auto* o = app.add_subcommand("oracle", "brute-force prime implicates over a bounded clause space");
    o->add_option("kb", okb, "knowledge base file")->required();
    o->add_option("--vars", vars, "comma separated vocabulary")->required();
    o->add_option("--depth", depth, "modal nesting bound")->check(CLI::Range(0, 2));
    o->add_option("--width", width, "components per level")->check(CLI::Range(1, 3));
    o->add_flag("--formula", oformula, "read the file as a single formula");

    double scale = 1.0;
    std::uint64_t seed = checks::Scale{}.seed;
    auto* s = app.add_subcommand("selftest", "run the property suites");
    s->add_option("--scale", scale, "instance count multiplier")->check(CLI::PositiveNumber);
    s->add_option("--seed", seed, "generator seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (c->parsed()) return compile(co, out, err);
        if (q->parsed()) return query(compiled, clause_text, node_budget, out, err);
        if (p->parsed()) return prove(formula, node_budget, out);
        if (o->parsed()) return oracle(okb, oformula, vars, depth, width, out);
        if (s->parsed()) return selftest(scale, seed, out);
    } catch (const BudgetExceeded& e) {
        err << "kpi: " << e.what() << "\n";
        return BudgetHit;
    } catch (const ParseError& e) {
        err << "kpi: " << e.what() << "\n";
        return Usage;
    } catch (const std::exception& e) {
        err << "kpi: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}

}  // namespace kpi::cli
