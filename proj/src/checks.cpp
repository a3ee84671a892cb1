#include "kpi/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>

#include "kpi/errors.hpp"
#include "kpi/io.hpp"
#include "kpi/normalize.hpp"
#include "kpi/parser.hpp"
#include "kpi/resolution.hpp"
#include "kpi/tableau.hpp"
#include "kpi/tree_models.hpp"

namespace kpi::checks {

namespace {

constexpr std::size_t kMaxNotes = 5;

const std::vector<std::string> kVars{"p", "q", "r"};

std::vector<std::string> first_vars(std::size_t n) { return {kVars.begin(), kVars.begin() + std::min(n, kVars.size())}; }

class Timer {
public:
    explicit Timer(CheckResult& r) : r_(r), t0_(std::chrono::steady_clock::now()) {}
    ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

private:
    CheckResult& r_;
    std::chrono::steady_clock::time_point t0_;
};

std::set<std::string> keys(const std::vector<Clause>& cs) {
    std::set<std::string> out;
    for (const auto& c : cs) out.insert(c.key());
    return out;
}

std::string list(const std::vector<Clause>& cs) {
    std::string out;
    for (const auto& c : cs) out += (out.empty() ? "" : ", ") + c.key();
    return "{" + out + "}";
}

std::string describe(const Cnf& u) { return list(u.clauses()); }

// Clause space of the brute-force suites.
ClauseSpace small_space() { return {{"p", "q"}, 1, 2}; }

const std::vector<Clause>& small_space_clauses() {
    static const std::vector<Clause> all = enumerate_clauses(small_space());
    return all;
}

Cnf small_kb(Gen& g) {
    const auto& pool = small_space_clauses();
    std::size_t n = 1 + g.below(3);
    std::vector<Clause> cs;
    while (cs.size() < n) {
        const Clause& c = g.pick(pool);
        if (!c.is_bottom()) cs.push_back(c);
    }
    return simplify(Cnf(std::move(cs)));
}

PicConfig budgeted_config(RuleSet rules) {
    PicConfig cfg;
    cfg.rules = rules;
    cfg.clause_budget = 2000;
    return cfg;
}

}  // namespace

// ---------------------------------------------------------------- generators

Formula Gen::formula(const std::vector<std::string>& vars, std::size_t depth, std::size_t size) {
    if (size == 0) {
        if (vars.empty() || coin(0.12)) return Formula::bottom();
        return Formula::var(pick(vars));
    }
    std::size_t choice = below(depth > 0 ? 5 : 3);
    switch (choice) {
        case 0: return Formula::negate(formula(vars, depth, size - 1));
        case 1:
        case 2: {
            std::size_t left = below(size);
            Formula a = formula(vars, depth, left);
            Formula b = formula(vars, depth, size - 1 - left);
            return choice == 1 ? Formula::conj(a, b) : Formula::disj(a, b);
        }
        case 3: return Formula::diamond(formula(vars, depth - 1, size - 1));
        default: return Formula::box(formula(vars, depth - 1, size - 1));
    }
}

Cnf Gen::raw_set(const std::vector<std::string>& vars, std::size_t depth, std::size_t width, bool junk) {
    std::vector<Clause> members;
    std::size_t n = 1 + below(width);
    for (std::size_t i = 0; i < n; ++i) {
        if (junk && coin(0.1)) {
            members.push_back(Clause::bottom());
            continue;
        }
        members.push_back(build(vars, depth, width, junk));
        if (junk && coin(0.1)) members.push_back(members.back());
    }
    return Cnf(std::move(members));
}

Clause Gen::build(const std::vector<std::string>& vars, std::size_t depth, std::size_t width, bool junk) {
    std::vector<Literal> lits;
    std::vector<Clause> boxes;
    std::vector<Cnf> dias;
    std::size_t n = 1 + below(width);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t kind = depth == 0 || coin(0.4) ? 0 : 1 + below(2);
        if (kind == 0 && vars.empty()) kind = depth == 0 ? 3 : 1;
        switch (kind) {
            case 0: lits.push_back({pick(vars), coin()}); break;
            case 1: boxes.push_back(junk && coin(0.1) ? Clause::bottom() : build(vars, depth - 1, width, junk)); break;
            case 2: dias.push_back(raw_set(vars, depth - 1, width, junk)); break;
            default: break;
        }
        if (junk && coin(0.15)) {
            if (!lits.empty() && coin()) lits.push_back(lits.back());
            else if (!boxes.empty() && coin()) boxes.push_back(boxes.back());
            else if (!dias.empty()) dias.push_back(dias.back());
        }
    }
    if (junk && depth > 0 && coin(0.1)) dias.push_back(Cnf({Clause::bottom()}));
    return Clause(std::move(lits), std::move(boxes), std::move(dias));
}

Clause Gen::clause(const std::vector<std::string>& vars, std::size_t depth, std::size_t width) {
    return simplify(build(vars, depth, width, false));
}

Clause Gen::raw_clause(const std::vector<std::string>& vars, std::size_t depth, std::size_t width) {
    return build(vars, depth, width, true);
}

Cnf Gen::kb(const std::vector<std::string>& vars, std::size_t clauses, std::size_t depth, std::size_t width) {
    std::vector<Clause> cs;
    for (std::size_t i = 0; i < clauses; ++i) cs.push_back(clause(vars, depth, width));
    return simplify(Cnf(std::move(cs)));
}

void CheckResult::fail(std::string what) {
    if (failures++ < kMaxNotes) notes.push_back(std::move(what));
}

std::size_t Scale::count(std::size_t n) const {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(n) * factor)));
}

// ------------------------------------------------------------ worked example

Cnf worked_example_kb() { return parse_kb("<>(p & (~p | []r))\n[]<>(~r | q)\n[][](~p | r)\n"); }

std::vector<Clause> worked_example_expected() {
    return sorted_unique({
        parse_clause("[][](~p | r)"),
        parse_clause("[]<>((~r | q) & (~p | q))"),
        parse_clause("<>(p & (~p | []r) & []r & <>((~r | q) & q) & <>((~r | q) & (~p | q) & q))"),
    });
}

CoverReport mutual_cover(const std::vector<Clause>& expected, const std::vector<Clause>& output,
                         EntailmentOracle& oracle) {
    CoverReport r;
    for (const auto& e : expected)
        if (std::none_of(output.begin(), output.end(), [&](const Clause& o) { return oracle.entails(o, e); }))
            r.expected_uncovered.push_back(e);
    for (const auto& o : output)
        if (std::none_of(expected.begin(), expected.end(), [&](const Clause& e) { return oracle.entails(e, o); }))
            r.output_uncovered.push_back(o);
    return r;
}

CheckResult check_worked_example(RuleSet rules) {
    CheckResult r{std::string("worked example (") + to_string(rules) + ")"};
    Timer t(r);
    Cnf u = worked_example_kb();
    PicConfig cfg;
    cfg.rules = rules;
    cfg.max_iterations = 10;
    PicResult res = prime_implicates(u, cfg);
    r.cases = 1;
    if (!res.converged) r.fail("no convergence within 10 iterations");
    EntailmentOracle oracle;
    auto expected = worked_example_expected();
    auto cover = mutual_cover(expected, res.prime_implicates, oracle);
    for (const auto& e : cover.expected_uncovered) r.fail("listed clause not covered: " + e.key());
    for (const auto& o : cover.output_uncovered) r.fail("output clause not covered by the list: " + o.key());

    auto want = keys(expected), got = keys(res.prime_implicates);
    r.notes.push_back("iterations " + std::to_string(res.iterations) + ", " +
                      std::to_string(res.prime_implicates.size()) + " prime implicates");
    for (const auto& k : want)
        if (!got.count(k)) r.notes.push_back("- " + k);
    for (const auto& k : got)
        if (!want.count(k)) r.notes.push_back("+ " + k);
    // Arbitration for uncovered output members: sound and stronger?
    for (const auto& o : cover.output_uncovered) {
        bool sound = is_implicate(u, o);
        bool stronger = std::any_of(expected.begin(), expected.end(), [&](const Clause& e) { return oracle.entails(o, e); });
        r.notes.push_back("oracle on " + o.key() + ": implicate " + (sound ? "yes" : "NO") +
                          ", entails a listed clause " + (stronger ? "yes" : "no"));
    }
    return r;
}

// ------------------------------------------------------------------ soundness

CheckResult check_soundness(const Scale& s) {
    CheckResult r{"soundness of closure step and PIC"};
    Timer t(r);
    Gen g(s.seed ^ 0x50);
    std::size_t clauses_checked = 0;
    for (std::size_t i = 0; i < s.count(200); ++i) {
        auto vars = first_vars(1 + g.below(3));
        Cnf u = g.kb(vars, 1 + g.below(4), g.below(3), 1 + g.below(4));
        ++r.cases;
        Formula kb = to_formula(u);
        try {
            PicConfig cfg = budgeted_config(RuleSet::Extended);
            ResolutionConfig rc;
            rc.clause_budget = cfg.clause_budget;
            for (const auto& c : closure_step(u.clauses(), rc).clauses) {
                ++clauses_checked;
                if (!local_entails(kb, to_formula(c))) r.fail("closure clause " + c.key() + " not implied by " + describe(u));
            }
            PicResult res = prime_implicates(u, cfg);
            if (!res.converged) {
                ++r.skipped;
                continue;
            }
            for (const auto& c : res.prime_implicates) {
                ++clauses_checked;
                if (!local_entails(kb, to_formula(c))) r.fail("PIC clause " + c.key() + " not implied by " + describe(u));
            }
        } catch (const BudgetExceeded&) {
            ++r.skipped;
        }
    }
    r.notes.push_back(std::to_string(clauses_checked) + " clauses checked");
    return r;
}

// ------------------------------------------------------------------- covering

CheckResult check_covering(const Scale& s, RuleSet rules) {
    CheckResult r{std::string("covering against brute force (") + to_string(rules) + ")"};
    Timer t(r);
    Gen g(s.seed ^ 0xC0);
    for (std::size_t i = 0; i < s.count(50); ++i) {
        Cnf u = small_kb(g);
        ++r.cases;
        EntailmentOracle oracle;
        PicConfig cfg;
        cfg.rules = rules;
        PicResult res = prime_implicates(u, cfg, oracle);
        if (!res.converged) {
            r.fail("no convergence on " + describe(u));
            continue;
        }
        auto brute = prime_implicates_brute(u, small_space(), oracle);
        for (const auto& b : brute)
            if (std::none_of(res.prime_implicates.begin(), res.prime_implicates.end(),
                             [&](const Clause& p) { return oracle.entails(p, b); }))
                r.fail("brute member " + b.key() + " not covered by PIC on " + describe(u));
        for (const auto& p : res.prime_implicates) {
            if (!within_space(p, small_space())) continue;
            if (std::none_of(brute.begin(), brute.end(), [&](const Clause& b) { return oracle.entails(b, p); }))
                r.fail("PIC member " + p.key() + " not covered by brute force on " + describe(u));
        }
    }
    return r;
}

// -------------------------------------------------------------------- residue

CheckResult check_residue(const Scale& s) {
    CheckResult r{"residue antichain and covering"};
    Timer t(r);
    Gen g(s.seed ^ 0x8E);
    for (std::size_t i = 0; i < s.count(500); ++i) {
        auto vars = first_vars(1 + g.below(2));
        std::vector<Clause> y;
        std::size_t n = 1 + g.below(7);
        for (std::size_t k = 0; k < n; ++k) {
            if (!y.empty() && g.coin(0.15)) y.push_back(simplify(disjoin(g.pick(y), g.clause(vars, 1, 1))));
            else y.push_back(g.clause(vars, g.below(2), 1 + g.below(2)));
        }
        ++r.cases;
        EntailmentOracle oracle;
        auto out = residue(y, oracle);
        auto in_keys = keys(y);
        std::string where = " in residue of " + list(y);
        for (const auto& d : out.kept)
            if (!in_keys.count(d.key())) r.fail(d.key() + " not an input" + where);
        for (std::size_t a = 0; a < out.kept.size(); ++a)
            for (std::size_t b = 0; b < out.kept.size(); ++b)
                if (a != b && clause_entails(out.kept[a], out.kept[b]))
                    r.fail(out.kept[a].key() + " entails " + out.kept[b].key() + where);
        for (const auto& c : y)
            if (std::none_of(out.kept.begin(), out.kept.end(), [&](const Clause& d) { return clause_entails(d, c); }))
                r.fail(c.key() + " uncovered" + where);
        for (const auto& d : out.dropped)
            if (!keys(out.kept).count(d.subsumer)) r.fail("drop of " + d.clause.key() + " names a non-member" + where);
        auto shuffled = y;
        std::shuffle(shuffled.begin(), shuffled.end(), g.engine());
        if (keys(residue(shuffled)) != keys(out.kept)) r.fail("order dependent" + where);
    }
    return r;
}

// ------------------------------------------------------------- simplification

CheckResult check_simplification(const Scale& s) {
    CheckResult r{"simplification"};
    Timer t(r);
    Gen g(s.seed ^ 0x51);
    for (std::size_t i = 0; i < s.count(1000); ++i) {
        auto vars = first_vars(1 + g.below(2));
        Clause c = g.raw_clause(vars, g.below(3), 1 + g.below(3));
        ++r.cases;
        Clause nf = simplify(c);
        if (!(simplify(nf) == nf)) r.fail("not idempotent on " + c.key());
        if (!is_normal(nf) || !rewrite_steps(nf).empty()) r.fail("rules still apply to " + nf.key());
        // random rewrite order
        Clause cur = c;
        for (;;) {
            auto steps = rewrite_steps(cur);
            if (steps.empty()) break;
            Clause next = g.pick(steps);
            if (length(next) >= length(cur)) {
                r.fail("non-decreasing step " + cur.key() + " ~> " + next.key());
                break;
            }
            cur = std::move(next);
        }
        if (set_key(cur) != set_key(nf)) r.fail("divergent normal forms for " + c.key() + ": " + cur.key() + " vs " + nf.key());
        Formula a = to_formula(c), b = to_formula(nf);
        if (!local_entails(a, b) || !local_entails(b, a)) r.fail("simplify changed the meaning of " + c.key());
    }
    return r;
}

// ------------------------------------------------------- oracle cross-check

CheckResult check_oracle_agreement(const Scale& s) {
    CheckResult r{"tableau vs tree-model enumeration"};
    Timer t(r);
    Gen g(s.seed ^ 0x0A);
    while (r.cases < s.count(500)) {
        auto vars = first_vars(1 + g.below(2));
        Formula f = g.formula(vars, g.below(3), 1 + g.below(10));
        // enumeration branching is capped at 3 successors
        if (diamond_count_nnf(f) > 3) continue;
        ++r.cases;
        auto fv = variables(f);
        std::vector<std::string> vocab(fv.begin(), fv.end());
        SatResult sat = satisfiable(f);
        bool brute = satisfiable_by_enumeration(f, vocab);
        if (sat.satisfiable != brute)
            r.fail(render(f) + ": tableau " + (sat ? "SAT" : "UNSAT") + ", enumeration " + (brute ? "SAT" : "UNSAT"));
        if (sat && (!sat.model.well_formed() || !model_check(sat.model, sat.world, f)))
            r.fail("witness for " + render(f) + " fails model checking");
        Formula h = g.formula(vars, 1, 4);
        if (local_entails(f, h) != !satisfiable(Formula::conj(f, Formula::negate(h))).satisfiable)
            r.fail("local_entails disagrees with satisfiable on " + render(f) + ", " + render(h));
    }
    return r;
}

// ------------------------------------------------------------ query agreement

CheckResult check_query_agreement(const Scale& s) {
    CheckResult r{"query agreement"};
    Timer t(r);
    Gen g(s.seed ^ 0x9A);
    std::size_t queries = 0;
    for (std::size_t i = 0; i < s.count(20); ++i) {
        Cnf u = small_kb(g);
        ++r.cases;
        EntailmentOracle oracle;
        PicResult res = prime_implicates(u, {}, oracle);
        if (!res.converged) {
            r.fail("no convergence on " + describe(u));
            continue;
        }
        Formula kb = to_formula(u);
        for (const auto& q : small_space_clauses()) {
            ++queries;
            bool via_pi = answer_query(res.prime_implicates, q, oracle).has_value();
            if (via_pi != local_entails(kb, to_formula(q)))
                r.fail("query " + q.key() + " on " + describe(u) + ": compiled says " + (via_pi ? "true" : "false"));
        }
    }
    r.notes.push_back(std::to_string(queries) + " queries");
    return r;
}

// ---------------------------------------------------------------- core syntax

CheckResult check_round_trip(const Scale& s) {
    CheckResult r{"parse/render round trip"};
    Timer t(r);
    Gen g(s.seed ^ 0x22);
    for (std::size_t i = 0; i < s.count(1000); ++i) {
        Formula f = g.formula(kVars, g.below(4), g.below(20));
        ++r.cases;
        if (!(parse(render(f)) == f)) r.fail("round trip changed " + render(f));
        Clause c = g.clause(kVars, g.below(3), 1 + g.below(3));
        if (!(clause_from_json(to_json(c)) == c)) r.fail("JSON round trip changed " + c.key());
    }
    return r;
}

CheckResult check_cnf_equivalence(const Scale& s) {
    CheckResult r{"CNF conversion equivalence"};
    Timer t(r);
    Gen g(s.seed ^ 0xCF);
    while (r.cases < s.count(300)) {
        Formula f = g.formula(first_vars(2 + g.below(2)), g.below(3), 1 + g.below(14));
        if (length(f) > 30) continue;
        ++r.cases;
        Cnf u = to_cnf(f);
        for (const auto& c : u.clauses())
            if (!is_normal(c)) r.fail("non-normal clause " + c.key() + " from " + render(f));
        Formula h = to_formula(u);
        if (!local_entails(f, h) || !local_entails(h, f)) r.fail(render(f) + " not equivalent to " + render(u));
    }
    return r;
}

CheckResult check_length(const Scale& s) {
    CheckResult r{"length metric"};
    Timer t(r);
    Gen g(s.seed ^ 0x1E);
    for (std::size_t i = 0; i < s.count(500); ++i) {
        Formula a = g.formula(kVars, 2, g.below(10));
        Formula b = g.formula(kVars, 2, g.below(10));
        ++r.cases;
        if (length(a) == 0) r.fail("zero length for " + render(a));
        if (length(Formula::conj(a, b)) != length(a) + length(b) + 1) r.fail("& not additive on " + render(a));
        if (length(Formula::disj(a, b)) != length(a) + length(b) + 1) r.fail("| not additive on " + render(a));
        Clause c = g.clause(kVars, 2, 3);
        if (length(c) != length(to_formula(c))) r.fail("clause length mismatch on " + c.key());
    }
    return r;
}

CheckResult check_modal_duality(const Scale& s) {
    CheckResult r{"box/diamond duality and model counts"};
    Timer t(r);
    if (count_tree_models({"p"}, 0, 0) != 2) r.fail("vocab {p}, depth 0: expected 2 models");
    if (count_tree_models({"p"}, 1, 1) != 6) r.fail("vocab {p}, depth 1, branching 1: expected 6 models");
    if (count_tree_models({}, 0, 0) != 1) r.fail("empty vocab, depth 0: expected 1 model");
    auto models = enumerate_tree_models({"p", "q"}, 2, 2);
    Gen g(s.seed ^ 0xDD);
    for (std::size_t i = 0; i < s.count(100); ++i) {
        Formula a = g.formula({"p", "q"}, 1, g.below(6));
        Formula lhs = Formula::box(a);
        Formula rhs = Formula::negate(Formula::diamond(Formula::negate(a)));
        ++r.cases;
        for (const auto& m : models)
            if (model_check(m, m.root, lhs) != model_check(m, m.root, rhs)) {
                r.fail("[]A and ~<>~A differ for A = " + render(a));
                break;
            }
    }
    return r;
}

// ----------------------------------------------------------------- resolution

CheckResult check_resolution_shape(const Scale& s) {
    CheckResult r{"resolvent symmetry, normal form, soundness"};
    Timer t(r);
    Gen g(s.seed ^ 0x5E);
    auto conclusions = [](const std::vector<ResolutionStep>& steps) {
        std::set<std::string> out;
        for (const auto& st : steps) out.insert(st.conclusion.key());
        return out;
    };
    for (std::size_t i = 0; i < s.count(300); ++i) {
        auto vars = first_vars(1 + g.below(3));
        Clause a = g.clause(vars, g.below(3), 1 + g.below(3));
        Clause b = g.clause(vars, g.below(3), 1 + g.below(3));
        ++r.cases;
        auto ab = sigma_resolvents(a, b);
        if (conclusions(ab) != conclusions(sigma_resolvents(b, a))) r.fail("sigma not symmetric on " + a.key() + ", " + b.key());
        Formula both = Formula::conj(to_formula(a), to_formula(b));
        for (const auto& st : ab) {
            if (!is_normal(st.conclusion)) r.fail("non-normal resolvent " + st.conclusion.key());
            if (!local_entails(both, to_formula(st.conclusion)))
                r.fail("unsound sigma resolvent " + st.conclusion.key() + " of " + a.key() + ", " + b.key());
        }
        for (const auto& st : gamma_resolvents(a)) {
            if (!is_normal(st.conclusion)) r.fail("non-normal resolvent " + st.conclusion.key());
            if (!local_entails(to_formula(a), to_formula(st.conclusion)))
                r.fail("unsound gamma resolvent " + st.conclusion.key() + " of " + a.key());
        }
        std::vector<Clause> u = sorted_unique({a, b});
        auto closed = keys(closure_step(u).clauses);
        for (const auto& c : u)
            if (!closed.count(c.key())) r.fail("closure step lost " + c.key());
    }
    return r;
}

CheckResult check_propositional_agreement(const Scale& s) {
    CheckResult r{"propositional resolution agreement"};
    Timer t(r);
    Gen g(s.seed ^ 0x3B);
    for (std::size_t i = 0; i < s.count(500); ++i) {
        Clause a = g.clause(kVars, 0, 1 + g.below(3));
        Clause b = g.clause(kVars, 0, 1 + g.below(3));
        ++r.cases;
        std::set<std::string> classical;
        if (a.is_bottom() || b.is_bottom()) classical.insert(Clause::bottom().key());
        for (const auto& l : a.literals())
            for (const auto& m : b.literals()) {
                if (!(l.complement() == m)) continue;
                std::vector<Literal> lits;
                for (const auto& x : a.literals())
                    if (!(x == l)) lits.push_back(x);
                for (const auto& x : b.literals())
                    if (!(x == m)) lits.push_back(x);
                classical.insert(simplify(Clause(std::move(lits), {}, {})).key());
            }
        std::set<std::string> engine;
        for (const auto& st : sigma_resolvents(a, b)) engine.insert(st.conclusion.key());
        if (engine != classical) r.fail("sigma differs from classical resolution on " + a.key() + ", " + b.key());
    }
    return r;
}

// ------------------------------------------------------------ PIC invariants

CheckResult check_pic_invariants(const Scale& s) {
    CheckResult r{"PIC antichain, input covering, fixpoint"};
    Timer t(r);
    Gen g(s.seed ^ 0x1C);
    for (std::size_t i = 0; i < s.count(40); ++i) {
        Cnf u = i % 2 ? small_kb(g) : g.kb(first_vars(1 + g.below(3)), 1 + g.below(3), g.below(2), 1 + g.below(3));
        ++r.cases;
        EntailmentOracle oracle;
        PicResult res;
        try {
            res = prime_implicates(u, budgeted_config(RuleSet::Extended), oracle);
        } catch (const BudgetExceeded&) {
            ++r.skipped;
            continue;
        }
        if (!res.converged) {
            ++r.skipped;
            continue;
        }
        const auto& pi = res.prime_implicates;
        std::string where = " on " + describe(u);
        for (std::size_t a = 0; a < pi.size(); ++a)
            for (std::size_t b = 0; b < pi.size(); ++b)
                if (a != b && clause_entails(pi[a], pi[b])) r.fail(pi[a].key() + " entails " + pi[b].key() + where);
        for (const auto& c : u.clauses())
            if (std::none_of(pi.begin(), pi.end(), [&](const Clause& d) { return clause_entails(d, c); }))
                r.fail("input " + c.key() + " uncovered" + where);
        for (const auto& c : pi)
            if (!is_implicate(u, c)) r.fail(c.key() + " not an implicate" + where);
        auto again = residue(closure_step(pi).clauses);
        if (keys(again) != keys(pi)) r.fail("not a fixpoint" + where);
    }
    return r;
}

std::vector<CheckResult> run_all(const Scale& s) {
    std::vector<std::function<CheckResult()>> suites{
        [&] { return check_round_trip(s); },
        [&] { return check_length(s); },
        [&] { return check_cnf_equivalence(s); },
        [&] { return check_simplification(s); },
        [&] { return check_modal_duality(s); },
        [&] { return check_oracle_agreement(s); },
        [&] { return check_propositional_agreement(s); },
        [&] { return check_resolution_shape(s); },
        [&] { return check_residue(s); },
        [&] { return check_soundness(s); },
        [&] { return check_pic_invariants(s); },
        [&] { return check_covering(s); },
        [&] { return check_query_agreement(s); },
        [] { return check_worked_example(RuleSet::Basic); },
    };
    std::vector<CheckResult> out;
    for (const auto& run : suites) out.push_back(run());
    return out;
}

}  // namespace kpi::checks
