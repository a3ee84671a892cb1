#include "kpi/brute.hpp"

#include <algorithm>
#include <functional>

#include "kpi/normalize.hpp"

namespace kpi {

namespace {

// Calls fn on every subset of pool with 1..k elements, in index order.
template <class T>
void for_each_subset(const std::vector<T>& pool, std::size_t k, const std::function<void(const std::vector<T>&)>& fn) {
    std::vector<T> cur;
    std::function<void(std::size_t)> go = [&](std::size_t start) {
        if (!cur.empty()) fn(cur);
        if (cur.size() == k) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            go(i + 1);
            cur.pop_back();
        }
    };
    go(0);
}

std::vector<Clause> clauses_at(const std::vector<std::string>& vocab, std::size_t depth, std::size_t width) {
    std::vector<Clause> pool;
    for (const auto& v : vocab) {
        pool.push_back(Clause::of({v, true}));
        pool.push_back(Clause::of({v, false}));
    }
    if (depth > 0) {
        auto below = clauses_at(vocab, depth - 1, width);
        std::vector<Clause> bodies;
        for (const auto& c : below) {
            pool.push_back(Clause::boxed(c));
            if (!c.is_bottom()) bodies.push_back(c);
        }
        for_each_subset<Clause>(bodies, width,
                                [&](const std::vector<Clause>& s) { pool.push_back(Clause::diamond(Cnf(s))); });
    }
    std::vector<Clause> out{Clause::bottom()};
    for_each_subset<Clause>(pool, width, [&](const std::vector<Clause>& s) {
        Clause c = Clause::bottom();
        for (const auto& x : s) c = disjoin(c, x);
        out.push_back(simplify(c));
    });
    return sorted_unique(std::move(out));
}

bool literals_in(const Clause& c, const std::vector<std::string>& vocab) {
    return std::all_of(c.literals().begin(), c.literals().end(), [&](const Literal& l) {
        return std::find(vocab.begin(), vocab.end(), l.var) != vocab.end();
    });
}

}  // namespace

std::vector<Clause> enumerate_clauses(const ClauseSpace& space) {
    return clauses_at(space.vocab, space.depth, space.width);
}

bool within_space(const Clause& c, const ClauseSpace& space) {
    if (c.component_count() > space.width || !literals_in(c, space.vocab)) return false;
    if (c.boxes().empty() && c.diamonds().empty()) return true;
    if (space.depth == 0) return false;
    ClauseSpace below{space.vocab, space.depth - 1, space.width};
    for (const auto& b : c.boxes())
        if (!within_space(b, below)) return false;
    for (const auto& d : c.diamonds()) {
        if (d.empty() || d.size() > space.width) return false;
        for (const auto& m : d.clauses())
            if (m.is_bottom() || !within_space(m, below)) return false;
    }
    return true;
}

std::vector<Clause> prime_implicates_brute(const Cnf& u, const ClauseSpace& space, EntailmentOracle& oracle) {
    std::vector<Clause> implicates;
    Formula kb = to_formula(u);
    for (auto& c : enumerate_clauses(space))
        if (local_entails(kb, to_formula(c), oracle.node_budget())) implicates.push_back(std::move(c));
    return residue(implicates, oracle).kept;
}

std::vector<Clause> prime_implicates_brute(const Cnf& u, const ClauseSpace& space, std::size_t node_budget) {
    EntailmentOracle oracle(node_budget);
    return prime_implicates_brute(u, space, oracle);
}

}  // namespace kpi
