// kpi/clause.hpp - modal DNF clauses and CNF clause sets.
//
// A clause is the disjunction
//
//     L1 | ... | Lu | []D1 | ... | []Dv | <>A1 | ... | <>Aw
//
// of literals, boxed clauses and diamonds over clause sets (read
// conjunctively).  The clause with no components is bot; the CNF with no
// clauses is the vacuous conjunction.
//
// Construction stores components exactly as given, duplicates and all, so
// the raw output of a rule instance can be represented before simplify()
// brings it to normal form.  Normal-form clauses keep each component list
// sorted (literals by name then polarity, boxes and diamonds by key) and
// duplicate free, which makes key() a canonical key for them.

#ifndef KPI_CLAUSE_HPP
#define KPI_CLAUSE_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "kpi/formula.hpp"

namespace kpi {

struct Literal {
    std::string var;
    bool positive = true;

    Literal complement() const { return {var, !positive}; }
    friend bool operator==(const Literal&, const Literal&) = default;
    /// Name first, positive before negative.
    friend bool operator<(const Literal& a, const Literal& b) {
        if (a.var != b.var) return a.var < b.var;
        return a.positive && !b.positive;
    }
};

class Cnf;

class Clause {
public:
    /// The empty clause, bot.
    Clause();
    Clause(std::vector<Literal> literals, std::vector<Clause> boxes, std::vector<Cnf> diamonds);

    static Clause bottom() { return Clause(); }
    static Clause of(Literal lit);
    static Clause boxed(Clause body);
    static Clause diamond(Cnf body);

    const std::vector<Literal>& literals() const { return literals_; }
    const std::vector<Clause>& boxes() const { return boxes_; }
    const std::vector<Cnf>& diamonds() const { return diamonds_; }

    bool is_bottom() const { return literals_.empty() && boxes_.empty() && diamonds_.empty(); }
    std::size_t component_count() const { return literals_.size() + boxes_.size() + diamonds_.size(); }

    /// Text in the CLI grammar, components in stored order.  Canonical for
    /// normal-form clauses.
    const std::string& key() const { return key_; }

    /// Structural equality of the stored component lists (order sensitive).
    friend bool operator==(const Clause& a, const Clause& b) { return a.key_ == b.key_; }

private:
    std::vector<Literal> literals_;
    std::vector<Clause> boxes_;
    std::vector<Cnf> diamonds_;
    std::string key_;
};

class Cnf {
public:
    Cnf() = default;
    explicit Cnf(std::vector<Clause> clauses);

    const std::vector<Clause>& clauses() const { return clauses_; }
    bool empty() const { return clauses_.empty(); }
    std::size_t size() const { return clauses_.size(); }
    bool contains_bottom() const;
    const std::string& key() const { return key_; }

    friend bool operator==(const Cnf& a, const Cnf& b) { return a.key_ == b.key_; }

private:
    std::vector<Clause> clauses_;
    std::string key_ = "~bot";
};

/// Clause disjunction: concatenation of the component lists.
Clause disjoin(const Clause& a, const Clause& b);

/// Component removed, by position in literals, boxes, diamonds order.
Clause without_component(const Clause& c, std::size_t index);
/// The single component at that position as a unit clause.
Clause component(const Clause& c, std::size_t index);

Formula to_formula(const Literal& l);
Formula to_formula(const Clause& c);
Formula to_formula(const Cnf& u);

/// length(to_formula(c)) computed structurally.
std::size_t length(const Clause& c);
std::size_t length(const Cnf& u);
std::size_t modal_depth(const Clause& c);

/// Clause and CNF text in the CLI grammar (same as key()).
std::string render(const Clause& c);
std::string render(const Cnf& u);

/// Normal-form CNF equivalent to f, built by plain distribution (no new
/// variables).  Throws BudgetExceeded(CnfClauses) when an intermediate clause
/// set grows past `clause_budget`.
Cnf to_cnf(const Formula& f, std::size_t clause_budget = 10000);

}  // namespace kpi

#endif
