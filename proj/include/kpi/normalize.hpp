// kpi/normalize.hpp - the simplification relation and canonical keys.
//
// Four rewrite rules, applied as a congruence (at any depth):
//
//   <>bot        ~> bot           a diamond over {bot, ...} is bot
//   bot | D      ~> D             a bot disjunct vanishes
//   (bot, E)     ~> bot           a clause set containing bot is {bot}
//   A | A | D    ~> A | D         duplicate components (and duplicate
//                                 clauses inside a clause set) merge
//
// Every rule strictly shrinks length(), so rewriting terminates.  []bot has
// no rule and is a legal normal-form component.

#ifndef KPI_NORMALIZE_HPP
#define KPI_NORMALIZE_HPP

#include <string>
#include <vector>

#include "kpi/clause.hpp"

namespace kpi {

/// Normal form, computed innermost first in one bottom-up pass.
Clause simplify(const Clause& c);
Cnf simplify(const Cnf& u);

/// Canonical key of a normal-form clause.  Equal keys iff equal up to
/// reordering of set components; std::string order is the total order.
inline const std::string& canonical_key(const Clause& c) { return c.key(); }

bool is_normal(const Clause& c);

/// Every clause reachable by exactly one rule application at one position.
/// Empty iff no rule applies anywhere (component order is not a rule).
/// Used to check confluence against random rewrite orders.
std::vector<Clause> rewrite_steps(const Clause& c);
std::vector<Cnf> rewrite_steps(const Cnf& u);

/// Identity of a raw clause up to reordering of its set components, with no
/// rule applied.
std::string set_key(const Clause& c);
std::string set_key(const Cnf& u);

/// Sorted by key, duplicates removed; elements are assumed normal.
std::vector<Clause> sorted_unique(std::vector<Clause> clauses);

}  // namespace kpi

#endif
