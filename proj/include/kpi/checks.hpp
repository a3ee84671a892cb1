// kpi/checks.hpp - random instance generators and property suites.
//
// Shared by the acceptance binary and `kpi selftest`.  Every suite is
// deterministic for a given seed and reports counts rather than asserting,
// so callers decide how to print and what to exit with.

#ifndef KPI_CHECKS_HPP
#define KPI_CHECKS_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kpi/brute.hpp"
#include "kpi/clause.hpp"
#include "kpi/formula.hpp"
#include "kpi/pic.hpp"

namespace kpi::checks {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    template <class T>
    const T& pick(const std::vector<T>& xs) { return xs[below(xs.size())]; }

    /// Random formula over vars with modal depth <= depth and about `size`
    /// connectives.  Uses every connective including bot.
    Formula formula(const std::vector<std::string>& vars, std::size_t depth, std::size_t size);

    /// Normal-form clause: 1..width components per level, nesting <= depth.
    Clause clause(const std::vector<std::string>& vars, std::size_t depth, std::size_t width);
    /// Raw clause seeded with redexes: duplicate components, <>{bot, ...}
    /// and bot inside clause sets.
    Clause raw_clause(const std::vector<std::string>& vars, std::size_t depth, std::size_t width);
    Cnf kb(const std::vector<std::string>& vars, std::size_t clauses, std::size_t depth, std::size_t width);

    std::mt19937_64& engine() { return rng_; }

private:
    Cnf raw_set(const std::vector<std::string>& vars, std::size_t depth, std::size_t width, bool junk);
    Clause build(const std::vector<std::string>& vars, std::size_t depth, std::size_t width, bool junk);
    std::mt19937_64 rng_;
};

struct CheckResult {
    explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    /// Instances excluded by a stated rule (e.g. a run that hit a budget).
    std::size_t skipped = 0;
    double seconds = 0;
    /// First few failure descriptions, then free-form remarks.
    std::vector<std::string> notes;

    bool passed() const { return failures == 0 && cases > 0; }
    void fail(std::string what);
};

struct Scale {
    /// Multiplies every instance count; 1.0 is the acceptance size.
    double factor = 1.0;
    std::uint64_t seed = 20240607;
    std::size_t count(std::size_t n) const;
};

/// The knowledge base of the worked example and the clauses the hand
/// computation lists as its prime implicates.
Cnf worked_example_kb();
std::vector<Clause> worked_example_expected();

struct CoverReport {
    /// Expected members with no covering output member, and vice versa.
    std::vector<Clause> expected_uncovered;
    std::vector<Clause> output_uncovered;
    bool mutual() const { return expected_uncovered.empty() && output_uncovered.empty(); }
};
CoverReport mutual_cover(const std::vector<Clause>& expected, const std::vector<Clause>& output,
                         EntailmentOracle& oracle);

CheckResult check_worked_example(RuleSet rules);
CheckResult check_soundness(const Scale& s);
CheckResult check_covering(const Scale& s, RuleSet rules = RuleSet::Extended);
CheckResult check_residue(const Scale& s);
CheckResult check_simplification(const Scale& s);
CheckResult check_oracle_agreement(const Scale& s);
CheckResult check_query_agreement(const Scale& s);

CheckResult check_round_trip(const Scale& s);
CheckResult check_cnf_equivalence(const Scale& s);
CheckResult check_length(const Scale& s);
CheckResult check_modal_duality(const Scale& s);
CheckResult check_resolution_shape(const Scale& s);
CheckResult check_propositional_agreement(const Scale& s);
CheckResult check_pic_invariants(const Scale& s);

/// Every suite above, in a fixed order.
std::vector<CheckResult> run_all(const Scale& s);

}  // namespace kpi::checks

#endif
