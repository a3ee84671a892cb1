#include "doctest.h"

#include "kpi/clause.hpp"
#include "kpi/errors.hpp"
#include "kpi/parser.hpp"
#include "kpi/tableau.hpp"

using namespace kpi;

namespace {

Formula v(const char* n) { return Formula::var(n); }

bool equivalent(const Formula& a, const Formula& b) { return local_entails(a, b) && local_entails(b, a); }

}  // namespace

TEST_CASE("parse maps the grammar onto constructors") {
    CHECK(parse("p & ~p") == Formula::conj(v("p"), Formula::negate(v("p"))));
    CHECK(parse("<>(p & (~p | []r))") ==
          Formula::diamond(Formula::conj(v("p"), Formula::disj(Formula::negate(v("p")), Formula::box(v("r"))))));
    CHECK(parse("bot") == Formula::bottom());
    CHECK(parse("x_1") == v("x_1"));
}

TEST_CASE("arrows are sugar") {
    CHECK(parse("p -> q") == Formula::disj(Formula::negate(v("p")), v("q")));
    Formula iff = parse("p <-> q");
    CHECK(iff.is(FormulaKind::And));
    CHECK(equivalent(iff, parse("(p & q) | (~p & ~q)")));
    // right associative
    CHECK(parse("p -> q -> r") == parse("p -> (q -> r)"));
    CHECK(parse("p <-> q <-> r") == parse("p <-> (q <-> r)"));
}

TEST_CASE("precedence") {
    CHECK(parse("p | q & r") == parse("p | (q & r)"));
    CHECK(parse("~p & q") == parse("(~p) & q"));
    CHECK(parse("[]p | q") == parse("([]p) | q"));
    CHECK(parse("p | q -> r") == parse("(p | q) -> r"));
    CHECK(parse("p -> q <-> r") == parse("(p -> q) <-> r"));
    CHECK(parse("p & q & r") == parse("(p & q) & r"));
}

TEST_CASE("syntax errors carry position and expectations") {
    try {
        parse("p &\n  (q | )");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 8);
        CHECK(e.found() == "')'");
        CHECK(std::find(e.expected().begin(), e.expected().end(), "identifier") != e.expected().end());
    }
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("p q"), ParseError);
    CHECK_THROWS_AS(parse("p $ q"), ParseError);
    CHECK_THROWS_AS(parse("(p"), ParseError);
    CHECK_THROWS_AS(parse("bot1 &"), ParseError);
}

TEST_CASE("render") {
    CHECK(render(Formula::conj(v("p"), v("q"))) == "(p & q)");
    CHECK(render(Formula::box(Formula::bottom())) == "[]bot");
    Formula f = parse("<>(p & (~p | []r))");
    CHECK(render(f) == "<>(p & (~p | []r))");
    CHECK(parse(render(f)) == f);
    Formula g = parse("~(p | ~[]<>q) & (bot | r)");
    CHECK(parse(render(g)) == g);
}

TEST_CASE("length counts symbols, bot as one") {
    CHECK(length(v("p")) == 1);
    CHECK(length(parse("p & ~p")) == 4);
    CHECK(length(parse("<>[]r")) == 3);
    CHECK(length(Formula::bottom()) == 1);
    CHECK(length(parse("p | bot")) == 3);
    Formula a = parse("<>p"), b = parse("~q");
    CHECK(length(Formula::conj(a, b)) == length(a) + length(b) + 1);
}

TEST_CASE("modal depth and nnf diamond count") {
    CHECK(modal_depth(parse("p")) == 0);
    CHECK(modal_depth(parse("<>[]p | []q")) == 2);
    CHECK(diamond_count_nnf(parse("<>p & []q")) == 1);
    CHECK(diamond_count_nnf(parse("~[]p & ~<>q")) == 1);
    CHECK(diamond_count_nnf(parse("~(<>p | []q)")) == 1);
}

TEST_CASE("to_cnf splits and distributes") {
    Cnf a = to_cnf(v("p"));
    REQUIRE(a.size() == 1);
    CHECK(a.clauses()[0].key() == "p");

    Cnf b = to_cnf(parse("p & q"));
    REQUIRE(b.size() == 2);
    CHECK(b.clauses()[0].key() == "p");
    CHECK(b.clauses()[1].key() == "q");

    Formula f = parse("(p & q) | r");
    Cnf c = to_cnf(f);
    REQUIRE(c.size() == 2);
    CHECK(c.clauses()[0].key() == "p | r");
    CHECK(c.clauses()[1].key() == "q | r");
    CHECK(equivalent(f, to_formula(c)));
}

TEST_CASE("to_cnf nests clause shapes under modalities") {
    Formula f = parse("[](p & q) | <>(r | s)");
    Cnf u = to_cnf(f);
    CHECK(equivalent(f, to_formula(u)));
    for (const auto& c : u.clauses()) {
        for (const auto& b : c.boxes()) CHECK(b.component_count() >= 1);
    }
    Cnf d = to_cnf(parse("<>((p | q) & ~r)"));
    REQUIRE(d.size() == 1);
    REQUIRE(d.clauses()[0].diamonds().size() == 1);
    CHECK(d.clauses()[0].diamonds()[0].size() == 2);
    CHECK(to_cnf(parse("~bot")).empty());
    CHECK(to_cnf(parse("p & ~p")).size() == 2);
}

TEST_CASE("to_cnf budget") {
    Formula f = parse("(a & b) | (c & d) | (e & g) | (h & i) | (j & k)");
    CHECK(to_cnf(f).size() == 32);
    try {
        to_cnf(f, 10);
        FAIL("no budget error");
    } catch (const BudgetExceeded& e) {
        CHECK(e.which() == Budget::CnfClauses);
        CHECK(e.limit() == 10);
    }
}

TEST_CASE("clause keys and lengths") {
    Clause c({{"q", true}, {"p", false}}, {Clause::of({"r", true})}, {Cnf({Clause::of({"p", true})})});
    CHECK(c.key() == "q | ~p | []r | <>p");
    CHECK(length(c) == length(to_formula(c)));
    CHECK(Clause::bottom().key() == "bot");
    CHECK(length(Clause::bottom()) == 1);
    CHECK(Cnf().key() == "~bot");
    CHECK(component(c, 2).key() == "[]r");
    CHECK(without_component(c, 0).key() == "~p | []r | <>p");
}
