#include "doctest.h"

#include "kpi/io.hpp"
#include "kpi/normalize.hpp"
#include "kpi/tableau.hpp"

using namespace kpi;

namespace {

Clause lit(const char* v, bool pos = true) { return Clause::of({v, pos}); }
Cnf bot_set() { return Cnf({Clause::bottom()}); }

}  // namespace

TEST_CASE("diamond over bot vanishes") {
    CHECK(simplify(Clause({}, {}, {bot_set()})).is_bottom());
    Clause c({{"p", true}}, {}, {bot_set()});
    Clause nf = simplify(c);
    CHECK(nf.key() == "p");
    CHECK(local_entails(to_formula(c), to_formula(nf)));
    CHECK(local_entails(to_formula(nf), to_formula(c)));
}

TEST_CASE("duplicate components merge") {
    Clause c({{"p", true}, {"p", true}, {"q", true}}, {}, {});
    CHECK(simplify(c).key() == "p | q");
    Clause boxes({}, {lit("r"), lit("r")}, {});
    CHECK(simplify(boxes).key() == "[]r");
}

TEST_CASE("a clause set containing bot is bot") {
    Cnf u({Clause::bottom(), lit("q")});
    Cnf nf = simplify(u);
    REQUIRE(nf.size() == 1);
    CHECK(nf.clauses()[0].is_bottom());
    // also inside diamonds, where it then vanishes
    Clause d({{"p", true}}, {}, {Cnf({lit("q"), Clause::bottom()})});
    CHECK(simplify(d).key() == "p");
}

TEST_CASE("box bot is a normal form") {
    Clause c = Clause::boxed(Clause::bottom());
    CHECK(simplify(c).key() == "[]bot");
    CHECK(is_normal(c));
    CHECK(rewrite_steps(c).empty());
}

TEST_CASE("rules apply at every depth") {
    Clause inner({{"p", true}, {"p", true}}, {}, {bot_set()});
    Clause c({}, {inner}, {Cnf({inner, inner})});
    Clause nf = simplify(c);
    CHECK(nf.key() == "[]p | <>p");
    CHECK(is_normal(nf));
    CHECK(!is_normal(c));
    CHECK(!rewrite_steps(c).empty());
    CHECK(simplify(nf) == nf);
}

TEST_CASE("canonical keys ignore component order") {
    CHECK(canonical_key(simplify(Clause({{"p", true}, {"q", true}}, {}, {}))) ==
          canonical_key(simplify(Clause({{"q", true}, {"p", true}}, {}, {}))));
    CHECK(canonical_key(lit("p")) != canonical_key(lit("q")));
    // two copies of <>(~r | q, ~p | q) built in different orders collapse
    Clause a = parse_clause("[]<>((~r | q) & (~p | q))");
    Clause rq({{"r", false}, {"q", true}}, {}, {});
    Clause pq({{"q", true}, {"p", false}}, {}, {});
    Clause b = simplify(Clause({}, {Clause({}, {}, {Cnf({pq, rq})})}, {}));
    CHECK(a.key() == b.key());
    CHECK(simplify(Clause({}, {a, b}, {})).boxes().size() == 1);
}

TEST_CASE("literal order puts positive first") {
    Clause c = simplify(Clause({{"q", true}, {"p", false}, {"p", true}}, {}, {}));
    CHECK(c.key() == "p | ~p | q");
}

TEST_CASE("set_key sees through order but applies no rules") {
    Clause a({{"q", true}, {"p", true}}, {}, {});
    Clause b({{"p", true}, {"q", true}}, {}, {});
    Clause c({{"p", true}, {"q", true}, {"q", true}}, {}, {});
    CHECK(set_key(a) == set_key(b));
    CHECK(set_key(a) != set_key(c));
}

TEST_CASE("every rewrite step shrinks the clause") {
    Clause inner({{"p", true}, {"p", true}}, {}, {bot_set()});
    Clause c({{"q", true}}, {inner, inner}, {Cnf({inner, Clause::bottom()}), bot_set()});
    for (const auto& s : rewrite_steps(c)) CHECK(length(s) < length(c));
}
