#include "doctest.h"

#include <set>

#include "kpi/brute.hpp"
#include "kpi/checks.hpp"
#include "kpi/errors.hpp"
#include "kpi/io.hpp"
#include "kpi/normalize.hpp"
#include "kpi/pic.hpp"

using namespace kpi;

namespace {

Clause c(const char* text) { return parse_clause(text); }

std::set<std::string> keys(const std::vector<Clause>& cs) {
    std::set<std::string> out;
    for (const auto& x : cs) out.insert(x.key());
    return out;
}

Cnf kb(std::initializer_list<const char*> lines) {
    std::vector<Clause> cs;
    for (const char* l : lines) cs.push_back(c(l));
    return simplify(Cnf(cs));
}

}  // namespace

TEST_CASE("clause entailment") {
    CHECK(clause_entails(c("p"), c("p | q")));
    CHECK(!clause_entails(c("[]p"), c("<>p")));
    CHECK(clause_entails(Clause::bottom(), c("<>q")));
    CHECK(clause_entails(c("<>(p & q)"), c("<>p")));
    EntailmentOracle o;
    CHECK(o.entails(c("p"), c("p | q")));
    CHECK(!o.entails(c("[]p"), c("<>p")));
    CHECK(!o.entails(c("[]p"), c("<>p")));
    CHECK(o.tableau_calls() == 1);
}

TEST_CASE("residue") {
    CHECK(keys(residue({c("p"), c("p | q")})) == std::set<std::string>{"p"});
    CHECK(keys(residue({c("p")})) == std::set<std::string>{"p"});
    CHECK(keys(residue({c("p"), c("q")})) == std::set<std::string>{"p", "q"});
    CHECK(residue({}).empty());
}

TEST_CASE("residue keeps the smaller of two equivalent clauses") {
    // <>p | <>q and <>(p | q) say the same thing
    auto r = residue({c("<>p | <>q"), c("<>(p | q)")});
    CHECK(keys(r) == std::set<std::string>{"<>(p | q)"});
}

TEST_CASE("residue evicts a shorter but weaker kept clause") {
    // p | ~p goes first by length and is kept until q | r | s arrives
    std::vector<Clause> y{c("q | r | s"), c("p | ~p")};
    EntailmentOracle o;
    auto r = residue(y, o);
    CHECK(keys(r.kept) == std::set<std::string>{"q | r | s"});
    REQUIRE(r.dropped.size() == 1);
    CHECK(r.dropped[0].clause.key() == "p | ~p");
    CHECK(r.dropped[0].subsumer == "q | r | s");
}

TEST_CASE("residue drops a long valid clause for a short one") {
    auto r = residue({c("[]bot | <>(p | ~p)"), c("p | ~p")});
    REQUIRE(r.size() == 1);
    CHECK(r[0].key() == "p | ~p");
}

TEST_CASE("reduce keeps meaning") {
    EntailmentOracle o;
    CHECK(reduce(c("<>(p & q) | <>p"), o).key() == "<>p");
    CHECK(reduce(c("<>(p | q) | <>~q"), o).key() == "<>~bot");
    CHECK(reduce(c("<>(p & []r & (~p | []r))"), o).key() == "<>([]r & p)");
    CHECK(reduce(c("<>(p & (~p | []r))"), o).key() == "<>(p & (~p | []r))");
    CHECK(reduce(c("p | q"), o).key() == "p | q");
    CHECK(reduce(c("[](<>(p & q) | <>p)"), o).key() == "[]<>p");
    for (const char* t : {"<>(p & q) | <>p | []r", "<>((p | q) & (p | ~q)) | q | [](r | <>r)"}) {
        Clause x = c(t), y = reduce(c(t), o);
        CHECK(clause_entails(x, y));
        CHECK(clause_entails(y, x));
    }
}

TEST_CASE("empty knowledge base") {
    PicResult r = prime_implicates(Cnf());
    CHECK(r.prime_implicates.empty());
    CHECK(r.converged);
}

TEST_CASE("propositional knowledge base") {
    Cnf u = kb({"p", "~p | q"});
    PicResult r = prime_implicates(u);
    CHECK(r.converged);
    CHECK(keys(r.prime_implicates) == std::set<std::string>{"p", "q"});
    // same answer from exhaustive search over the 2-variable clause space
    CHECK(keys(prime_implicates_brute(u, {{"p", "q"}, 0, 2})) == std::set<std::string>{"p", "q"});
}

TEST_CASE("inconsistent knowledge base compiles to bot") {
    PicResult r = prime_implicates(kb({"[]p", "<>~p"}));
    CHECK(keys(r.prime_implicates) == std::set<std::string>{"bot"});
    PicResult s = prime_implicates(kb({"p", "~p | q", "~q"}));
    CHECK(keys(s.prime_implicates) == std::set<std::string>{"bot"});
}

TEST_CASE("merge rules find what the basic rules miss") {
    Cnf u = kb({"[]p", "<>q"});
    PicResult ext = prime_implicates(u);
    CHECK(keys(ext.prime_implicates) == std::set<std::string>{"<>(p & q)", "[]p"});
    PicConfig cfg;
    cfg.rules = RuleSet::Basic;
    PicResult t1 = prime_implicates(u, cfg);
    CHECK(keys(t1.prime_implicates) == std::set<std::string>{"<>q", "[]p"});
    CHECK(is_implicate(u, c("<>(p & q)")));
}

TEST_CASE("worked example") {
    Cnf u = checks::worked_example_kb();
    for (auto rules : {RuleSet::Basic, RuleSet::Extended}) {
        PicConfig cfg;
        cfg.rules = rules;
        PicResult r = prime_implicates(u, cfg);
        CHECK(r.converged);
        CHECK(r.iterations <= 10);
        CHECK(r.prime_implicates.size() == 3);
        for (const auto& x : r.prime_implicates) CHECK(is_implicate(u, x));
        EntailmentOracle o;
        auto cover = checks::mutual_cover(checks::worked_example_expected(), r.prime_implicates, o);
        CHECK(cover.expected_uncovered.empty());
        if (rules == RuleSet::Basic) CHECK(cover.mutual());
    }
}

TEST_CASE("worked example: the second listed clause is not prime") {
    // the hand computation lists []<>(~r | q, ~p | q); under []<>(~r | q) and
    // [][](~p | r) every successor sees a (~r | q) & (~p | r) world
    Cnf u = checks::worked_example_kb();
    Clause listed = c("[]<>((~r | q) & (~p | q))");
    Clause stronger = c("[]<>((~r | q) & (~p | r))");
    CHECK(is_implicate(u, stronger));
    CHECK(clause_entails(stronger, listed));
    CHECK(!clause_entails(listed, stronger));
}

TEST_CASE("answer queries") {
    CHECK(answer_query({c("p")}, c("p | q")));
    CHECK(!answer_query({c("p")}, c("q")));
    PicResult r = prime_implicates(checks::worked_example_kb());
    CHECK(answer_query(r.prime_implicates, c("[][](~p | r)")));
    EntailmentOracle o;
    auto d = answer_query(r.prime_implicates, c("<>([]r | q)"), o);
    REQUIRE(d);
    CHECK(d->key().substr(0, 2) == "<>");
}

TEST_CASE("implicates") {
    CHECK(is_implicate(kb({"p", "q"}), c("p")));
    CHECK(!is_implicate(kb({"p"}), c("q")));
    CHECK(is_implicate(checks::worked_example_kb(), c("<>(p & (~p | []r) & []r)")));
}

TEST_CASE("iteration cap reports no convergence") {
    PicConfig cfg;
    cfg.max_iterations = 1;
    PicResult r = prime_implicates(checks::worked_example_kb(), cfg);
    CHECK(!r.converged);
    CHECK(r.iterations == 1);
    CHECK(r.trace.size() == 1);
}

TEST_CASE("budgets name the stage") {
    PicConfig cfg;
    cfg.clause_budget = 3;
    try {
        prime_implicates(checks::worked_example_kb(), cfg);
        FAIL("no budget error");
    } catch (const BudgetExceeded& e) {
        CHECK(e.which() == Budget::ClauseCount);
        CHECK(e.stage() == "pic stage 1");
    }
    PicConfig tight;
    tight.tableau_node_budget = 2;
    try {
        prime_implicates(checks::worked_example_kb(), tight);
        FAIL("no budget error");
    } catch (const BudgetExceeded& e) {
        CHECK(e.which() == Budget::TableauNodes);
        CHECK(e.stage() == "pic stage 1");
    }
}

TEST_CASE("trace records") {
    PicConfig cfg;
    cfg.keep_derivations = true;
    PicResult r = prime_implicates(checks::worked_example_kb(), cfg);
    REQUIRE(!r.trace.empty());
    CHECK(r.trace.front().stage == 1);
    CHECK(r.trace.back().residue_size == r.prime_implicates.size());
    std::size_t derived = 0;
    for (const auto& st : r.trace) derived += st.derivations.size();
    CHECK(derived > 0);
    for (const auto& st : r.trace)
        for (const auto& d : st.dropped) CHECK(!d.subsumer.empty());
}
