#include "doctest.h"

#include <set>

#include "kpi/brute.hpp"
#include "kpi/io.hpp"
#include "kpi/normalize.hpp"

using namespace kpi;

namespace {

std::set<std::string> keys(const std::vector<Clause>& cs) {
    std::set<std::string> out;
    for (const auto& x : cs) out.insert(x.key());
    return out;
}

}  // namespace

TEST_CASE("enumeration of small spaces") {
    CHECK(keys(enumerate_clauses({{"p"}, 0, 1})) == std::set<std::string>{"bot", "p", "~p"});
    CHECK(keys(enumerate_clauses({{"p"}, 0, 2})) == std::set<std::string>{"bot", "p", "~p", "p | ~p"});
    CHECK(keys(enumerate_clauses({{}, 1, 1})) == std::set<std::string>{"bot", "[]bot"});
}

TEST_CASE("enumeration size by hand count") {
    // depth 0 over {p, q}, width 2: bot, 4 literals, C(4,2) pairs
    CHECK(enumerate_clauses({{"p", "q"}, 0, 2}).size() == 1 + 4 + 6);
    // depth 1: 4 literals + 11 boxes + diamonds over 1..2 of the 10 non-bot
    // clauses (10 + 45) = 70 components, clauses of 0..2 components
    CHECK(enumerate_clauses({{"p", "q"}, 1, 2}).size() == 1 + 70 + 70 * 69 / 2);
}

TEST_CASE("enumeration yields normal forms only once") {
    auto all = enumerate_clauses({{"p"}, 1, 2});
    CHECK(keys(all).size() == all.size());
    for (const auto& c : all) {
        CHECK(is_normal(c));
        CHECK(within_space(c, {{"p"}, 1, 2}));
    }
}

TEST_CASE("space membership") {
    ClauseSpace s{{"p", "q"}, 1, 2};
    CHECK(within_space(parse_clause("p | <>(q & ~p)"), s));
    CHECK(!within_space(parse_clause("p | q | ~q"), s));
    CHECK(!within_space(parse_clause("[][]p"), s));
    CHECK(!within_space(parse_clause("r"), s));
}

TEST_CASE("brute-force prime implicates") {
    auto u = simplify(Cnf({parse_clause("p"), parse_clause("~p | q")}));
    CHECK(keys(prime_implicates_brute(u, {{"p", "q"}, 0, 2})) == std::set<std::string>{"p", "q"});
    CHECK(keys(prime_implicates_brute(Cnf({parse_clause("p")}), {{"p"}, 0, 2})) == std::set<std::string>{"p"});
    auto bad = simplify(Cnf({parse_clause("p"), Clause::bottom()}));
    CHECK(keys(prime_implicates_brute(bad, {{"p"}, 1, 2})) == std::set<std::string>{"bot"});
}
