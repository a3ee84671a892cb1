// kpi/resolution.hpp - direct resolution for K (sigma and gamma rules).
//
// sigma(A, B) resolves two clauses, gamma(A) resolves inside one clause:
//
//   A1          sigma(p, ~p) -> bot
//   A1'         sigma(bot, A) -> bot
//   sigma-or    sigma(A, B) -> C       gives  sigma(A | D1, B | D2) -> C | D1 | D2
//   box-diamond sigma(A, B) -> C       gives  sigma([]A, <>(B, E)) -> <>(B, C, E)
//   box-box     sigma(A, B) -> C       gives  sigma([]A, []B) -> []C
//   diamond-1   sigma(A, B) -> C       gives  gamma(<>(A, B, F)) -> <>(A, B, C, F)
//   diamond-2   gamma(A) -> B          gives  gamma(<>(A, F)) -> <>(B, A, F)
//   gamma-or    gamma(A) -> B          gives  gamma(A | C) -> B | C
//   gamma-box   gamma(A) -> B          gives  gamma([]A) -> []B
//
// These rules are refutation complete but do not derive every implicate:
// []p & <>q entails <>(p & q), yet no rule instance produces it.  The
// Extended rule set adds two sound merge rules that close that gap:
//
//   box-diamond-merge   sigma([]A, <>E) -> <>(A, E)
//   box-box-merge       sigma([]A, []B) -> []bot | <>(A, B)
//
// Both are threaded through sigma-or and apply at every nesting level.
// Every conclusion is brought to normal form.

#ifndef KPI_RESOLUTION_HPP
#define KPI_RESOLUTION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "kpi/clause.hpp"

namespace kpi {

enum class Rule {
    A1,
    A1Bottom,
    SigmaOr,
    SigmaBoxDiamond,
    SigmaBoxBox,
    SigmaBoxDiamondMerge,
    SigmaBoxBoxMerge,
    GammaDiamond1,
    GammaDiamond2,
    GammaOr,
    GammaBox,
};

/// Stable tag used in trace output, e.g. "sigma-boxdiamond".
const char* rule_name(Rule r);

enum class RuleSet {
    /// Exactly the sigma/gamma rules above.
    Basic,
    /// Basic plus the two merge rules.
    Extended,
};

const char* to_string(RuleSet r);
/// Accepts "basic" and "extended".
RuleSet rule_set_from_string(const std::string& s);

struct ResolutionConfig {
    RuleSet rules = RuleSet::Extended;
    /// Modal nesting the recursion may descend through.
    std::size_t max_depth = 64;
    /// Size cap on one closure step.
    std::size_t clause_budget = 20000;
};

struct ResolutionStep {
    Rule rule;
    /// Keys of the one or two premises.
    std::vector<std::string> premises;
    /// Normal form.
    Clause conclusion;
    std::vector<ResolutionStep> sub;

    /// Number of rule applications in the derivation tree.
    std::size_t size() const;
};

/// Every resolvent of the pair, one witness derivation per conclusion key,
/// ordered by key.  Throws BudgetExceeded(RecursionDepth).
std::vector<ResolutionStep> sigma_resolvents(const Clause& a, const Clause& b, const ResolutionConfig& cfg = {});

/// Every resolvent of a single clause, same conventions.
std::vector<ResolutionStep> gamma_resolvents(const Clause& a, const ResolutionConfig& cfg = {});

struct Closure {
    /// u plus all one-step resolvents, sorted by key.
    std::vector<Clause> clauses;
    /// Witness derivations of the clauses that were not already in u.
    std::vector<ResolutionStep> derivations;
};

/// One layer of rule application: sigma over unordered pairs of distinct
/// members, gamma over each member.  Inputs must be in normal form.  Throws
/// BudgetExceeded(ClauseCount) when the result passes cfg.clause_budget.
Closure closure_step(const std::vector<Clause>& u, const ResolutionConfig& cfg = {});

}  // namespace kpi

#endif
