// kpi/brute.hpp - brute-force prime implicates over a bounded clause space.
//
// A test instrument: every normal-form clause with at most `width`
// components per disjunction or conjunction level and modal nesting at most
// `depth` is enumerated, implicates are filtered with the tableau, and the
// survivors are minimised with residue().

#ifndef KPI_BRUTE_HPP
#define KPI_BRUTE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "kpi/clause.hpp"
#include "kpi/pic.hpp"

namespace kpi {

struct ClauseSpace {
    std::vector<std::string> vocab;
    std::size_t depth = 0;
    std::size_t width = 1;
};

/// Sorted by key, duplicate free, bot included.  Diamonds range over
/// non-empty clause sets without bot (anything else simplifies away).
std::vector<Clause> enumerate_clauses(const ClauseSpace& space);

/// Whether a normal-form clause lies in the enumerated space.
bool within_space(const Clause& c, const ClauseSpace& space);

std::vector<Clause> prime_implicates_brute(const Cnf& u, const ClauseSpace& space, EntailmentOracle& oracle);
std::vector<Clause> prime_implicates_brute(const Cnf& u, const ClauseSpace& space,
                                           std::size_t node_budget = kDefaultTableauNodeBudget);

}  // namespace kpi

#endif
