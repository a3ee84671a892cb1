// kpi/formula.hpp - modal K formula syntax tree.
//
// Formulas are immutable trees with shared children, so copies are cheap and
// values can be handed to concurrent workers freely.  Implication and the
// biconditional exist only in the surface grammar; the parser expands them.

#ifndef KPI_FORMULA_HPP
#define KPI_FORMULA_HPP

#include <cstddef>
#include <memory>
#include <set>
#include <string>

namespace kpi {

enum class FormulaKind { Var, Bottom, Not, And, Or, Diamond, Box };

class Formula {
public:
    static Formula var(std::string name);
    static Formula bottom();
    /// Encoded as ~bot; there is no separate top node.
    static Formula top();
    static Formula negate(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula diamond(Formula f);
    static Formula box(Formula f);
    static Formula implies(Formula a, Formula b);
    static Formula iff(Formula a, Formula b);

    FormulaKind kind() const { return node_->kind; }
    bool is(FormulaKind k) const { return node_->kind == k; }
    const std::string& name() const { return node_->name; }
    /// Operand of a unary node, left operand of a binary node.
    const Formula& lhs() const { return *node_->lhs; }
    const Formula& rhs() const { return *node_->rhs; }

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
    struct Node {
        FormulaKind kind;
        std::string name;
        std::shared_ptr<const Formula> lhs;
        std::shared_ptr<const Formula> rhs;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Formula make(FormulaKind k, std::string name, const Formula* l, const Formula* r);

    std::shared_ptr<const Node> node_;
};

/// Symbol count: variables, connectives and modal operators; bot counts as one.
std::size_t length(const Formula& f);

std::size_t modal_depth(const Formula& f);

/// Number of modal operators that become diamonds in negation normal form.
/// This bounds the successors any world of a tree model needs.
std::size_t diamond_count_nnf(const Formula& f);

std::set<std::string> variables(const Formula& f);

/// Fully parenthesised text in the CLI grammar; parse(render(f)) == f.
std::string render(const Formula& f);

/// Conjunction of the range, ~bot when empty.
template <class It>
Formula conjunction_of(It first, It last) {
    if (first == last) return Formula::top();
    Formula acc = *first;
    for (++first; first != last; ++first) acc = Formula::conj(acc, *first);
    return acc;
}

template <class It>
Formula disjunction_of(It first, It last) {
    if (first == last) return Formula::bottom();
    Formula acc = *first;
    for (++first; first != last; ++first) acc = Formula::disj(acc, *first);
    return acc;
}

}  // namespace kpi

#endif
