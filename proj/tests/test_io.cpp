#include "doctest.h"

#include "kpi/errors.hpp"
#include "kpi/io.hpp"
#include "kpi/parser.hpp"
#include "kpi/tableau.hpp"

using namespace kpi;

TEST_CASE("clause JSON shape") {
    Clause c = parse_clause("~p | q | [](r | <>s) | <>(p & ~q)");
    Json j = to_json(c);
    CHECK(j.dump() ==
          R"({"lits":["-p","q"],"boxes":[{"lits":["r"],"boxes":[],"diamonds":[[{"lits":["s"],"boxes":[],"diamonds":[]}]]}],)"
          R"("diamonds":[[{"lits":["p"],"boxes":[],"diamonds":[]},{"lits":["-q"],"boxes":[],"diamonds":[]}]]})");
    CHECK(clause_from_json(j) == c);
    CHECK(to_json(Clause::bottom()).dump() == R"({"lits":[],"boxes":[],"diamonds":[]})");
}

TEST_CASE("clause JSON is normalised on read") {
    Json j = Json::parse(R"({"lits":["q","p","q"],"boxes":[],"diamonds":[[{"lits":[],"boxes":[],"diamonds":[]}]]})");
    CHECK(clause_from_json(j).key() == "p | q");
    CHECK_THROWS_AS(clause_from_json(Json::parse(R"({"lits":[1]})")), Error);
    CHECK_THROWS_AS(clause_from_json(Json::parse(R"({"lits":[],"boxes":[]})")), Error);
    CHECK_THROWS_AS(clause_from_json(Json::parse(R"({"lits":["-"],"boxes":[],"diamonds":[]})")), Error);
}

TEST_CASE("model JSON shape") {
    SatResult r = satisfiable(parse("<>p & []q"));
    REQUIRE(r);
    Json j = to_json(r.model);
    CHECK(j.dump() == R"({"worlds":[0,1],"rel":[[0,1]],"val":{"p":[1],"q":[1]},"root":0})");
}

TEST_CASE("knowledge base files") {
    Cnf u = parse_kb("# comment\n\np | q   # trailing\n  \n[]r & s\n");
    REQUIRE(u.size() == 3);
    CHECK(u.clauses()[0].key() == "[]r");
    CHECK(u.clauses()[1].key() == "p | q");
    CHECK(u.clauses()[2].key() == "s");
    try {
        parse_kb("p\nq\n(r &\n");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("query clauses") {
    CHECK(parse_clause("[][](~p | r)").key() == "[][](~p | r)");
    CHECK(parse_clause("p -> q").key() == "~p | q");
    CHECK_THROWS_AS(parse_clause("p & q"), Error);
    CHECK_THROWS_AS(parse_clause("~bot"), Error);
}

TEST_CASE("result JSON shape") {
    PicResult r;
    r.prime_implicates = {parse_clause("p")};
    r.iterations = 2;
    r.converged = true;
    r.trace.push_back({1, 3, 1, {{parse_clause("p | q"), "p"}}, {}});
    CHECK(to_json(r).dump() ==
          R"({"prime_implicates":[{"lits":["p"],"boxes":[],"diamonds":[]}],"iterations":2,"converged":true,)"
          R"("trace":[{"stage":1,"closure_size":3,"residue_size":1,"dropped":[{"clause":"p | q","subsumer":"p"}]}]})");
    CHECK(prime_implicates_from_json(to_json(r)).front().key() == "p");
    CHECK_THROWS_AS(prime_implicates_from_json(Json::object()), Error);
}

TEST_CASE("trace line shape") {
    ResolutionStep s{Rule::A1, {"p", "~p"}, Clause::bottom(), {}};
    CHECK(to_json(s).dump() == R"({"rule":"axiom-a1","premises":["p","~p"],"conclusion":"bot","sub":[]})");
}
