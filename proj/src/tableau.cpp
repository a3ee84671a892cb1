#include "kpi/tableau.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "kpi/errors.hpp"

namespace kpi {

namespace {

enum class NK { Top, Bot, Lit, And, Or, Dia, Box };

struct NnfNode {
    NK kind;
    int var = -1;
    bool positive = true;
    int a = -1;
    int b = -1;
};

// Hash-consed negation normal form for one query.
class Arena {
public:
    int intern(NK k, int var, bool pos, int a, int b) {
        auto key = std::make_tuple(static_cast<int>(k), var, pos, a, b);
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        int id = static_cast<int>(nodes_.size());
        nodes_.push_back({k, var, pos, a, b});
        index_.emplace(key, id);
        return id;
    }

    int build(const Formula& f, bool positive) {
        switch (f.kind()) {
            case FormulaKind::Var: return intern(NK::Lit, var_id(f.name()), positive, -1, -1);
            case FormulaKind::Bottom: return intern(positive ? NK::Bot : NK::Top, -1, true, -1, -1);
            case FormulaKind::Not: return build(f.lhs(), !positive);
            case FormulaKind::And:
            case FormulaKind::Or: {
                bool conj = f.is(FormulaKind::And) == positive;
                int l = build(f.lhs(), positive);
                int r = build(f.rhs(), positive);
                return intern(conj ? NK::And : NK::Or, -1, true, l, r);
            }
            case FormulaKind::Diamond:
            case FormulaKind::Box: {
                bool dia = f.is(FormulaKind::Diamond) == positive;
                int body = build(f.lhs(), positive);
                return intern(dia ? NK::Dia : NK::Box, -1, true, body, -1);
            }
        }
        return -1;
    }

    const NnfNode& operator[](int id) const { return nodes_[static_cast<std::size_t>(id)]; }
    std::size_t size() const { return nodes_.size(); }
    const std::vector<std::string>& var_names() const { return names_; }

private:
    int var_id(const std::string& name) {
        auto it = vars_.find(name);
        if (it != vars_.end()) return it->second;
        int id = static_cast<int>(names_.size());
        names_.push_back(name);
        vars_.emplace(name, id);
        return id;
    }

    std::vector<NnfNode> nodes_;
    std::map<std::tuple<int, int, bool, int, int>, int> index_;
    std::map<std::string, int> vars_;
    std::vector<std::string> names_;
};

struct Tree {
    std::vector<int> true_vars;
    std::vector<std::shared_ptr<const Tree>> kids;
};

using TreePtr = std::shared_ptr<const Tree>;

struct Branch {
    std::vector<int> todo;
    std::vector<char> truth;  // 0 unknown, 1 true, 2 false
    std::vector<char> seen;
    std::vector<int> ors;
    std::vector<int> boxes;
    std::vector<int> dias;
};

class Prover {
public:
    Prover(const Arena& arena, std::size_t budget) : arena_(arena), budget_(budget) {}

    TreePtr world(std::vector<int> formulas) {
        std::sort(formulas.begin(), formulas.end());
        formulas.erase(std::unique(formulas.begin(), formulas.end()), formulas.end());
        auto it = memo_.find(formulas);
        if (it != memo_.end()) return it->second;
        Branch b;
        b.todo = formulas;
        b.truth.assign(arena_.var_names().size(), 0);
        b.seen.assign(arena_.size(), 0);
        TreePtr r = expand(std::move(b));
        memo_.emplace(std::move(formulas), r);
        return r;
    }

private:
    bool literal_blocked(const NnfNode& n, const Branch& b) const {
        char want = n.positive ? 1 : 2;
        return b.truth[static_cast<std::size_t>(n.var)] != 0 && b.truth[static_cast<std::size_t>(n.var)] != want;
    }

    bool satisfied(int id, const Branch& b) const {
        if (b.seen[static_cast<std::size_t>(id)]) return true;
        const auto& n = arena_[id];
        if (n.kind == NK::Top) return true;
        if (n.kind == NK::Lit) return b.truth[static_cast<std::size_t>(n.var)] == (n.positive ? 1 : 2);
        return false;
    }

    TreePtr expand(Branch b) {
        if (++nodes_ > budget_) throw BudgetExceeded(Budget::TableauNodes, budget_, "tableau");
        while (!b.todo.empty()) {
            int id = b.todo.back();
            b.todo.pop_back();
            if (b.seen[static_cast<std::size_t>(id)]) continue;
            b.seen[static_cast<std::size_t>(id)] = 1;
            const auto& n = arena_[id];
            switch (n.kind) {
                case NK::Top: break;
                case NK::Bot: return nullptr;
                case NK::Lit:
                    if (literal_blocked(n, b)) return nullptr;
                    b.truth[static_cast<std::size_t>(n.var)] = n.positive ? 1 : 2;
                    break;
                case NK::And:
                    b.todo.push_back(n.a);
                    b.todo.push_back(n.b);
                    break;
                case NK::Or: b.ors.push_back(id); break;
                case NK::Dia: b.dias.push_back(id); break;
                case NK::Box: b.boxes.push_back(id); break;
            }
        }

        for (std::size_t i = 0; i < b.ors.size(); ++i) {
            const auto& n = arena_[b.ors[i]];
            if (satisfied(n.a, b) || satisfied(n.b, b)) continue;
            std::vector<int> options;
            for (int child : {n.a, n.b}) {
                const auto& c = arena_[child];
                if (c.kind == NK::Bot || (c.kind == NK::Lit && literal_blocked(c, b))) continue;
                options.push_back(child);
            }
            for (int child : options) {
                Branch next = b;
                next.ors.erase(next.ors.begin(), next.ors.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                next.todo.push_back(child);
                if (TreePtr r = expand(std::move(next))) return r;
            }
            return nullptr;
        }

        auto tree = std::make_shared<Tree>();
        for (std::size_t v = 0; v < b.truth.size(); ++v)
            if (b.truth[v] == 1) tree->true_vars.push_back(static_cast<int>(v));
        for (int d : b.dias) {
            std::vector<int> succ{arena_[d].a};
            for (int bx : b.boxes) succ.push_back(arena_[bx].a);
            TreePtr kid = world(std::move(succ));
            if (!kid) return nullptr;
            tree->kids.push_back(std::move(kid));
        }
        return tree;
    }

    const Arena& arena_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::map<std::vector<int>, TreePtr> memo_;
};

WorldId unfold(const Tree& t, const std::vector<std::string>& names, KripkeModel& m) {
    WorldId w = static_cast<WorldId>(m.worlds.size());
    m.worlds.insert(w);
    for (int v : t.true_vars) m.valuation[names[static_cast<std::size_t>(v)]].insert(w);
    for (const auto& k : t.kids) m.relation.insert({w, unfold(*k, names, m)});
    return w;
}

}  // namespace

SatResult satisfiable(const Formula& f, std::size_t node_budget) {
    Arena arena;
    int root = arena.build(f, true);
    Prover prover(arena, node_budget);
    TreePtr t = prover.world({root});
    SatResult r;
    if (!t) return r;
    r.satisfiable = true;
    for (const auto& name : arena.var_names()) r.model.valuation[name];
    r.world = unfold(*t, arena.var_names(), r.model);
    r.model.root = r.world;
    return r;
}

bool local_entails(const Formula& f, const Formula& g, std::size_t node_budget) {
    return !satisfiable(Formula::conj(f, Formula::negate(g)), node_budget).satisfiable;
}

}  // namespace kpi
