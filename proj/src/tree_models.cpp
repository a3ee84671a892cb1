#include "kpi/tree_models.hpp"

#include <algorithm>

namespace kpi {

namespace {

using TreeList = std::vector<std::shared_ptr<const TreeNode>>;

std::vector<std::vector<bool>> valuations(std::size_t n) {
    std::vector<std::vector<bool>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<bool> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1U;
        out.push_back(std::move(v));
    }
    return out;
}

// Non-decreasing index sequences of length <= k over [0, n): multisets.
void for_each_multiset(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                       const std::function<bool(const std::vector<std::size_t>&)>& fn, bool& go) {
    if (!go) return;
    if (!fn(cur)) {
        go = false;
        return;
    }
    if (cur.size() == k) return;
    std::size_t start = cur.empty() ? 0 : cur.back();
    for (std::size_t i = start; i < n && go; ++i) {
        cur.push_back(i);
        for_each_multiset(n, k, cur, fn, go);
        cur.pop_back();
    }
}

TreeList trees_up_to(std::size_t n_vars, std::size_t depth, std::size_t branching) {
    TreeList level;
    for (auto& v : valuations(n_vars)) level.push_back(std::make_shared<TreeNode>(TreeNode{std::move(v), {}}));
    for (std::size_t d = 1; d <= depth; ++d) {
        TreeList next;
        for (const auto& v : valuations(n_vars)) {
            std::vector<std::size_t> cur;
            bool go = true;
            for_each_multiset(
                level.size(), branching, cur,
                [&](const std::vector<std::size_t>& idx) {
                    TreeNode t{v, {}};
                    for (std::size_t i : idx) t.children.push_back(level[i]);
                    next.push_back(std::make_shared<TreeNode>(std::move(t)));
                    return true;
                },
                go);
        }
        level = std::move(next);
    }
    return level;
}

WorldId unfold(const TreeNode& t, const std::vector<std::string>& vocab, KripkeModel& m) {
    WorldId w = static_cast<WorldId>(m.worlds.size());
    m.worlds.insert(w);
    for (std::size_t i = 0; i < vocab.size(); ++i)
        if (t.valuation[i]) m.valuation[vocab[i]].insert(w);
    for (const auto& c : t.children) m.relation.insert({w, unfold(*c, vocab, m)});
    return w;
}

}  // namespace

void for_each_tree_model(const std::vector<std::string>& vocab, std::size_t depth, std::size_t branching,
                         const std::function<bool(const TreeNode&)>& visit) {
    if (depth == 0) {
        for (auto& v : valuations(vocab.size()))
            if (!visit(TreeNode{std::move(v), {}})) return;
        return;
    }
    TreeList below = trees_up_to(vocab.size(), depth - 1, branching);
    for (const auto& v : valuations(vocab.size())) {
        std::vector<std::size_t> cur;
        bool go = true;
        for_each_multiset(
            below.size(), branching, cur,
            [&](const std::vector<std::size_t>& idx) {
                TreeNode root{v, {}};
                for (std::size_t i : idx) root.children.push_back(below[i]);
                return visit(root);
            },
            go);
        if (!go) return;
    }
}

std::size_t count_tree_models(const std::vector<std::string>& vocab, std::size_t depth, std::size_t branching) {
    std::size_t n = 0;
    for_each_tree_model(vocab, depth, branching, [&](const TreeNode&) {
        ++n;
        return true;
    });
    return n;
}

KripkeModel to_kripke(const TreeNode& root, const std::vector<std::string>& vocab) {
    KripkeModel m;
    for (const auto& v : vocab) m.valuation[v];
    m.root = unfold(root, vocab, m);
    return m;
}

std::vector<KripkeModel> enumerate_tree_models(const std::vector<std::string>& vocab, std::size_t depth,
                                               std::size_t branching) {
    std::vector<KripkeModel> out;
    for_each_tree_model(vocab, depth, branching, [&](const TreeNode& t) {
        out.push_back(to_kripke(t, vocab));
        return true;
    });
    return out;
}

TreeEvaluator::TreeEvaluator(const Formula& f, const std::vector<std::string>& vocab) { root_ = linearize(f, vocab); }

int TreeEvaluator::linearize(const Formula& f, const std::vector<std::string>& vocab) {
    Sub s{f.kind(), -1, -1, -1};
    switch (f.kind()) {
        case FormulaKind::Var: {
            auto it = std::find(vocab.begin(), vocab.end(), f.name());
            s.var = it == vocab.end() ? -1 : static_cast<int>(it - vocab.begin());
            break;
        }
        case FormulaKind::Bottom: break;
        case FormulaKind::Not:
        case FormulaKind::Diamond:
        case FormulaKind::Box: s.a = linearize(f.lhs(), vocab); break;
        case FormulaKind::And:
        case FormulaKind::Or:
            s.a = linearize(f.lhs(), vocab);
            s.b = linearize(f.rhs(), vocab);
            break;
    }
    subs_.push_back(s);
    return static_cast<int>(subs_.size()) - 1;
}

const std::vector<char>& TreeEvaluator::cached(const TreeNode& t) {
    auto it = cache_.find(&t);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(&t, evaluate(t)).first->second;
}

std::vector<char> TreeEvaluator::evaluate(const TreeNode& t) {
    std::vector<const std::vector<char>*> kids;
    kids.reserve(t.children.size());
    for (const auto& c : t.children) kids.push_back(&cached(*c));
    // children are linearized before parents, so one forward pass suffices
    std::vector<char> val(subs_.size(), 0);
    for (std::size_t i = 0; i < subs_.size(); ++i) {
        const Sub& s = subs_[i];
        auto a = static_cast<std::size_t>(s.a);
        switch (s.kind) {
            case FormulaKind::Var: val[i] = s.var >= 0 && t.valuation[static_cast<std::size_t>(s.var)]; break;
            case FormulaKind::Bottom: val[i] = 0; break;
            case FormulaKind::Not: val[i] = !val[a]; break;
            case FormulaKind::And: val[i] = val[a] && val[static_cast<std::size_t>(s.b)]; break;
            case FormulaKind::Or: val[i] = val[a] || val[static_cast<std::size_t>(s.b)]; break;
            case FormulaKind::Diamond:
                val[i] = std::any_of(kids.begin(), kids.end(), [&](const auto* k) { return (*k)[a] != 0; });
                break;
            case FormulaKind::Box:
                val[i] = std::all_of(kids.begin(), kids.end(), [&](const auto* k) { return (*k)[a] != 0; });
                break;
        }
    }
    return val;
}

bool TreeEvaluator::holds(const TreeNode& root) {
    // transient roots are not cached
    return evaluate(root)[static_cast<std::size_t>(root_)] != 0;
}

bool satisfiable_by_enumeration(const Formula& f, const std::vector<std::string>& vocab, std::size_t max_branching) {
    std::size_t branching = std::min(diamond_count_nnf(f), max_branching);
    TreeEvaluator ev(f, vocab);
    bool found = false;
    for_each_tree_model(vocab, modal_depth(f), branching, [&](const TreeNode& t) {
        found = ev.holds(t);
        return !found;
    });
    return found;
}

}  // namespace kpi
