// kpi/kripke.hpp - finite pointed Kripke models and truth evaluation.

#ifndef KPI_KRIPKE_HPP
#define KPI_KRIPKE_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kpi/formula.hpp"

namespace kpi {

using WorldId = int;

struct KripkeModel {
    std::set<WorldId> worlds;
    std::set<std::pair<WorldId, WorldId>> relation;
    std::map<std::string, std::set<WorldId>> valuation;
    WorldId root = 0;

    std::vector<WorldId> successors(WorldId w) const;
    bool holds(const std::string& var, WorldId w) const;
    /// root in worlds, relation and valuation images inside worlds.
    bool well_formed() const;
};

/// M, w |= f by structural recursion.  Throws Error for an unknown world.
bool model_check(const KripkeModel& m, WorldId w, const Formula& f);

}  // namespace kpi

#endif
