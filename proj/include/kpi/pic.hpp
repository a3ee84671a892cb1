// kpi/pic.hpp - residue, the prime implicate fixpoint, and query answering.
//
// Compilation iterates
//
//     U(i+1) = residue(closure_step(U(i)))
//
// from U(1) = U until two consecutive stages have identical canonical key
// sets.  Entailment between clauses is decided by the tableau.  Closure
// members are passed through reduce() before residue.

#ifndef KPI_PIC_HPP
#define KPI_PIC_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kpi/clause.hpp"
#include "kpi/resolution.hpp"
#include "kpi/tableau.hpp"

namespace kpi {

/// Clause-to-clause entailment with a memo table.  One instance per
/// compilation; not meant to be shared between threads.
class EntailmentOracle {
public:
    explicit EntailmentOracle(std::size_t node_budget = kDefaultTableauNodeBudget) : budget_(node_budget) {}

    bool entails(const Clause& d, const Clause& c);
    bool entails(const Cnf& u, const Clause& c);
    std::size_t tableau_calls() const { return tableau_calls_; }
    std::size_t node_budget() const { return budget_; }

private:
    std::size_t budget_;
    std::size_t tableau_calls_ = 0;
    std::map<std::pair<std::string, std::string>, bool> memo_;
    std::map<std::pair<std::string, std::string>, bool> set_memo_;
};

/// d |= c, uncached.
bool clause_entails(const Clause& d, const Clause& c, std::size_t node_budget = kDefaultTableauNodeBudget);

/// u |= c.
bool is_implicate(const Cnf& u, const Clause& c, std::size_t node_budget = kDefaultTableauNodeBudget);

/// Equivalent representative used between closure and residue, applied at
/// every nesting level:
///
///   <>A | <>B          ~> <>(A | B)     diamonds merge (clause set product)
///   <>(A, B) with A |= B  ~> <>(A)      implied members of a clause set go
///   X | Y with X |= Y  ~> Y             disjuncts implying a sibling go
///
/// Of two equivalent siblings the larger (length, key) goes.  Resolution
/// eliminates one component per step, and residue discards intermediate
/// resolvents that a premise already entails, so without this the loop can
/// miss implicates of clauses like <>(p | q) | <>~q, which is just <>~bot.
Clause reduce(const Clause& c, EntailmentOracle& oracle);

struct Dropped {
    Clause clause;
    /// Key of the kept clause whose entailment justified the drop.
    std::string subsumer;
};

struct Residue {
    /// Sorted by key.
    std::vector<Clause> kept;
    std::vector<Dropped> dropped;
};

/// Entailment-minimal covering subset.  Candidates go in (length, key)
/// order; a candidate entailed by a kept clause is dropped, otherwise it is
/// kept and evicts the kept clauses it entails.  Of two equivalent clauses
/// the smaller survives.
Residue residue(const std::vector<Clause>& y, EntailmentOracle& oracle);
std::vector<Clause> residue(const std::vector<Clause>& y, std::size_t node_budget = kDefaultTableauNodeBudget);

struct PicConfig {
    std::size_t max_iterations = 20;
    std::size_t clause_budget = 20000;
    std::size_t tableau_node_budget = kDefaultTableauNodeBudget;
    std::size_t recursion_depth = 64;
    RuleSet rules = RuleSet::Extended;
    /// Record witness derivations of the clauses each stage adds.
    bool keep_derivations = false;
};

struct StageRecord {
    std::size_t stage = 0;
    std::size_t closure_size = 0;
    std::size_t residue_size = 0;
    std::vector<Dropped> dropped;
    std::vector<ResolutionStep> derivations;
};

struct PicResult {
    std::vector<Clause> prime_implicates;
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<StageRecord> trace;
};

/// Throws BudgetExceeded with the stage reached when the clause, tableau or
/// recursion caps are hit.  Hitting max_iterations is not an error; the
/// result then reports converged == false.
PicResult prime_implicates(const Cnf& u, const PicConfig& cfg = {});
PicResult prime_implicates(const Cnf& u, const PicConfig& cfg, EntailmentOracle& oracle);

/// A member of pi entailing q, if any.
std::optional<Clause> answer_query(const std::vector<Clause>& pi, const Clause& q, EntailmentOracle& oracle);
bool answer_query(const std::vector<Clause>& pi, const Clause& q,
                  std::size_t node_budget = kDefaultTableauNodeBudget);

}  // namespace kpi

#endif
