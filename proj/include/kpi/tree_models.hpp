// kpi/tree_models.hpp - bounded enumeration of pointed tree models.
//
// An independent semantic oracle: K has the tree model property, so a
// formula of modal depth d with k diamonds (after pushing negations inward)
// is satisfiable iff it holds at the root of some tree of depth <= d whose
// worlds have <= k children.  Trees are enumerated up to isomorphism, children
// being multisets over the trees one level shallower.

#ifndef KPI_TREE_MODELS_HPP
#define KPI_TREE_MODELS_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "kpi/formula.hpp"
#include "kpi/kripke.hpp"

namespace kpi {

struct TreeNode {
    /// Truth of vocab[i] at this world.
    std::vector<bool> valuation;
    std::vector<std::shared_ptr<const TreeNode>> children;
};

/// Calls `visit` on every root up to the bounds; stops early when it
/// returns false.  Roots are transient, their subtrees are shared.
void for_each_tree_model(const std::vector<std::string>& vocab, std::size_t depth, std::size_t branching,
                         const std::function<bool(const TreeNode&)>& visit);

std::size_t count_tree_models(const std::vector<std::string>& vocab, std::size_t depth, std::size_t branching);

/// Materialised as ordinary pointed models; only for small bounds.
std::vector<KripkeModel> enumerate_tree_models(const std::vector<std::string>& vocab, std::size_t depth,
                                               std::size_t branching);

KripkeModel to_kripke(const TreeNode& root, const std::vector<std::string>& vocab);

/// Evaluates one formula over many trees, caching results per shared
/// subtree.  Variables outside the vocabulary are false everywhere.
class TreeEvaluator {
public:
    TreeEvaluator(const Formula& f, const std::vector<std::string>& vocab);
    bool holds(const TreeNode& root);

private:
    struct Sub {
        FormulaKind kind;
        int var;
        int a;
        int b;
    };
    int linearize(const Formula& f, const std::vector<std::string>& vocab);
    std::vector<char> evaluate(const TreeNode& t);
    const std::vector<char>& cached(const TreeNode& t);

    std::vector<Sub> subs_;
    int root_ = -1;
    std::unordered_map<const TreeNode*, std::vector<char>> cache_;
};

/// Brute-force satisfiability over the bounds derived from f, branching
/// capped at `max_branching`.
bool satisfiable_by_enumeration(const Formula& f, const std::vector<std::string>& vocab,
                                std::size_t max_branching = 3);

}  // namespace kpi

#endif
