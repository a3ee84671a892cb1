// Modal CNF by distribution over the negation normal form.  Box distributes
// over conjunction, diamond wraps the CNF of its body, disjunction takes the
// pairwise product of clause sets.

#include <set>

#include "kpi/clause.hpp"
#include "kpi/errors.hpp"
#include "kpi/normalize.hpp"

namespace kpi {

namespace {

class Converter {
public:
    explicit Converter(std::size_t budget) : budget_(budget) {}

    std::vector<Clause> run(const Formula& f, bool positive) {
        switch (f.kind()) {
            case FormulaKind::Var: return {Clause::of({f.name(), positive})};
            case FormulaKind::Bottom:
                if (positive) return {Clause::bottom()};
                return {};
            case FormulaKind::Not: return run(f.lhs(), !positive);
            case FormulaKind::And:
            case FormulaKind::Or: {
                bool conjunctive = f.is(FormulaKind::And) == positive;
                auto a = run(f.lhs(), positive);
                auto b = run(f.rhs(), positive);
                return conjunctive ? join(std::move(a), b) : product(a, b);
            }
            case FormulaKind::Diamond:
            case FormulaKind::Box: {
                bool diamond = f.is(FormulaKind::Diamond) == positive;
                auto body = run(f.lhs(), positive);
                if (diamond) return {simplify(Clause::diamond(Cnf(std::move(body))))};
                std::vector<Clause> out;
                out.reserve(body.size());
                for (auto& c : body) out.push_back(Clause::boxed(std::move(c)));
                return out;
            }
        }
        return {};
    }

private:
    std::vector<Clause> join(std::vector<Clause> a, const std::vector<Clause>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return normalized(std::move(a));
    }

    std::vector<Clause> product(const std::vector<Clause>& a, const std::vector<Clause>& b) {
        if (a.size() * b.size() > budget_) throw BudgetExceeded(Budget::CnfClauses, budget_, "cnf conversion");
        std::vector<Clause> out;
        out.reserve(a.size() * b.size());
        for (const auto& x : a)
            for (const auto& y : b) out.push_back(disjoin(x, y));
        return normalized(std::move(out));
    }

    std::vector<Clause> normalized(std::vector<Clause> cs) {
        Cnf s = simplify(Cnf(std::move(cs)));
        if (s.size() > budget_) throw BudgetExceeded(Budget::CnfClauses, budget_, "cnf conversion");
        return s.clauses();
    }

    std::size_t budget_;
};

}  // namespace

Cnf to_cnf(const Formula& f, std::size_t clause_budget) {
    return simplify(Cnf(Converter(clause_budget).run(f, true)));
}

}  // namespace kpi
