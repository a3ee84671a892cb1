#include "kpi/kripke.hpp"

#include <algorithm>
#include <limits>

#include "kpi/errors.hpp"

namespace kpi {

std::vector<WorldId> KripkeModel::successors(WorldId w) const {
    std::vector<WorldId> out;
    for (auto it = relation.lower_bound({w, std::numeric_limits<WorldId>::min()}); it != relation.end() && it->first == w;
         ++it)
        out.push_back(it->second);
    return out;
}

bool KripkeModel::holds(const std::string& var, WorldId w) const {
    auto it = valuation.find(var);
    return it != valuation.end() && it->second.count(w) != 0;
}

bool KripkeModel::well_formed() const {
    if (!worlds.count(root)) return false;
    for (const auto& [a, b] : relation)
        if (!worlds.count(a) || !worlds.count(b)) return false;
    for (const auto& [v, ws] : valuation)
        for (WorldId w : ws)
            if (!worlds.count(w)) return false;
    return true;
}

namespace {

bool eval(const KripkeModel& m, WorldId w, const Formula& f) {
    switch (f.kind()) {
        case FormulaKind::Var: return m.holds(f.name(), w);
        case FormulaKind::Bottom: return false;
        case FormulaKind::Not: return !eval(m, w, f.lhs());
        case FormulaKind::And: return eval(m, w, f.lhs()) && eval(m, w, f.rhs());
        case FormulaKind::Or: return eval(m, w, f.lhs()) || eval(m, w, f.rhs());
        case FormulaKind::Diamond: {
            auto succ = m.successors(w);
            return std::any_of(succ.begin(), succ.end(), [&](WorldId v) { return eval(m, v, f.lhs()); });
        }
        case FormulaKind::Box: {
            auto succ = m.successors(w);
            return std::all_of(succ.begin(), succ.end(), [&](WorldId v) { return eval(m, v, f.lhs()); });
        }
    }
    return false;
}

}  // namespace

bool model_check(const KripkeModel& m, WorldId w, const Formula& f) {
    if (!m.worlds.count(w)) throw Error("unknown world id " + std::to_string(w));
    return eval(m, w, f);
}

}  // namespace kpi
