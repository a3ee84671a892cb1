// kpi/tableau.hpp - K satisfiability and local consequence.
//
// A labelled tableau over negation normal form: conjunctions expand in
// place, disjunctions branch, and every diamond at a world opens a successor
// that receives its body plus all box bodies of the world.  Open branches
// yield finite tree models of depth at most the modal depth of the input.

#ifndef KPI_TABLEAU_HPP
#define KPI_TABLEAU_HPP

#include <cstddef>
#include <optional>

#include "kpi/formula.hpp"
#include "kpi/kripke.hpp"

namespace kpi {

inline constexpr std::size_t kDefaultTableauNodeBudget = 100000;

struct SatResult {
    bool satisfiable = false;
    /// Verifying pointed model; meaningful only when satisfiable.
    KripkeModel model;
    WorldId world = 0;

    explicit operator bool() const { return satisfiable; }
};

/// Throws BudgetExceeded(TableauNodes) rather than guessing.
SatResult satisfiable(const Formula& f, std::size_t node_budget = kDefaultTableauNodeBudget);

/// f |= g locally: f & ~g has no pointed model.
bool local_entails(const Formula& f, const Formula& g, std::size_t node_budget = kDefaultTableauNodeBudget);

}  // namespace kpi

#endif
