#include "kpi/pic.hpp"

#include <algorithm>
#include <set>

#include "kpi/errors.hpp"
#include "kpi/normalize.hpp"

namespace kpi {

namespace {

template <class T>
bool keys_subset(const std::vector<T>& small, const std::vector<T>& big) {
    for (const auto& x : small)
        if (std::none_of(big.begin(), big.end(), [&](const T& y) { return y == x; })) return false;
    return true;
}

// d's components all occur in c.
bool subsumes(const Clause& d, const Clause& c) {
    return keys_subset(d.literals(), c.literals()) && keys_subset(d.boxes(), c.boxes()) &&
           keys_subset(d.diamonds(), c.diamonds());
}

bool has_complementary_literals(const Clause& c) {
    const auto& ls = c.literals();
    for (std::size_t i = 0; i + 1 < ls.size(); ++i)
        if (ls[i].var == ls[i + 1].var && ls[i].positive != ls[i + 1].positive) return true;
    return false;
}

std::set<std::string> key_set(const std::vector<Clause>& cs) {
    std::set<std::string> out;
    for (const auto& c : cs) out.insert(c.key());
    return out;
}

}  // namespace

bool EntailmentOracle::entails(const Clause& d, const Clause& c) {
    if (d.is_bottom() || subsumes(d, c) || has_complementary_literals(c)) return true;
    auto k = std::make_pair(d.key(), c.key());
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    ++tableau_calls_;
    bool r = local_entails(to_formula(d), to_formula(c), budget_);
    memo_.emplace(std::move(k), r);
    return r;
}

bool EntailmentOracle::entails(const Cnf& u, const Clause& c) {
    if (u.contains_bottom() || has_complementary_literals(c)) return true;
    for (const auto& d : u.clauses())
        if (subsumes(d, c)) return true;
    auto k = std::make_pair(u.key(), c.key());
    auto it = set_memo_.find(k);
    if (it != set_memo_.end()) return it->second;
    ++tableau_calls_;
    bool r = local_entails(to_formula(u), to_formula(c), budget_);
    set_memo_.emplace(std::move(k), r);
    return r;
}

bool clause_entails(const Clause& d, const Clause& c, std::size_t node_budget) {
    return local_entails(to_formula(d), to_formula(c), node_budget);
}

bool is_implicate(const Cnf& u, const Clause& c, std::size_t node_budget) {
    return local_entails(to_formula(u), to_formula(c), node_budget);
}

namespace {

bool smaller(const Clause& a, const Clause& b) {
    std::size_t la = length(a), lb = length(b);
    return la != lb ? la < lb : a.key() < b.key();
}

// <>A | <>B is <>(A | B); the clause set of A | B is the pairwise product.
Cnf merge_diamonds(const std::vector<Cnf>& ds) {
    std::vector<Clause> acc = ds.front().clauses();
    for (std::size_t i = 1; i < ds.size(); ++i) {
        std::vector<Clause> next;
        for (const auto& a : acc)
            for (const auto& b : ds[i].clauses()) next.push_back(simplify(disjoin(a, b)));
        acc = std::move(next);
    }
    return Cnf(std::move(acc));
}

Cnf reduce_set(const Cnf& s, EntailmentOracle& oracle) {
    std::vector<Clause> ms;
    for (const auto& m : s.clauses()) ms.push_back(reduce(m, oracle));
    Cnf cur = simplify(Cnf(std::move(ms)));
    if (cur.contains_bottom()) return cur;
    // members implied by the others go, largest first
    std::vector<Clause> order = cur.clauses();
    std::sort(order.begin(), order.end(), [](const Clause& a, const Clause& b) { return smaller(b, a); });
    std::vector<Clause> kept = cur.clauses();
    for (const auto& m : order) {
        std::vector<Clause> rest;
        for (const auto& k : kept)
            if (!(k == m)) rest.push_back(k);
        if (oracle.entails(Cnf(rest), m)) kept = std::move(rest);
    }
    return simplify(Cnf(std::move(kept)));
}

}  // namespace

Clause reduce(const Clause& c, EntailmentOracle& oracle) {
    std::vector<Clause> boxes;
    for (const auto& b : c.boxes()) boxes.push_back(reduce(b, oracle));
    std::vector<Cnf> dias;
    if (!c.diamonds().empty()) dias.push_back(reduce_set(merge_diamonds(c.diamonds()), oracle));
    Clause cur = simplify(Clause(c.literals(), std::move(boxes), std::move(dias)));
    for (bool changed = true; changed;) {
        changed = false;
        std::size_t n = cur.component_count();
        for (std::size_t i = 0; i < n && !changed; ++i) {
            Clause x = component(cur, i);
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                Clause y = component(cur, j);
                if (!oracle.entails(x, y)) continue;
                if (oracle.entails(y, x) && smaller(x, y)) continue;
                cur = without_component(cur, i);
                changed = true;
                break;
            }
        }
    }
    return cur;
}

Residue residue(const std::vector<Clause>& y, EntailmentOracle& oracle) {
    std::vector<const Clause*> order;
    std::set<std::string> seen;
    for (const auto& c : y)
        if (seen.insert(c.key()).second) order.push_back(&c);
    std::sort(order.begin(), order.end(), [](const Clause* a, const Clause* b) {
        std::size_t la = length(*a), lb = length(*b);
        return la != lb ? la < lb : a->key() < b->key();
    });

    Residue out;
    std::vector<Clause> kept;
    for (const Clause* cand : order) {
        auto cover = std::find_if(kept.begin(), kept.end(), [&](const Clause& k) { return oracle.entails(k, *cand); });
        if (cover != kept.end()) {
            out.dropped.push_back({*cand, cover->key()});
            continue;
        }
        // A shorter kept clause can still be strictly weaker; evict it.
        std::vector<Clause> still;
        for (auto& k : kept) {
            if (oracle.entails(*cand, k))
                out.dropped.push_back({std::move(k), cand->key()});
            else
                still.push_back(std::move(k));
        }
        kept = std::move(still);
        kept.push_back(*cand);
    }
    // An evicted subsumer may itself have been evicted later; redirect to a
    // survivor so every drop names a member of the result.
    for (auto& d : out.dropped) {
        if (std::any_of(kept.begin(), kept.end(), [&](const Clause& k) { return k.key() == d.subsumer; })) continue;
        for (const auto& k : kept)
            if (oracle.entails(k, d.clause)) {
                d.subsumer = k.key();
                break;
            }
    }
    std::sort(kept.begin(), kept.end(), [](const Clause& a, const Clause& b) { return a.key() < b.key(); });
    out.kept = std::move(kept);
    return out;
}

std::vector<Clause> residue(const std::vector<Clause>& y, std::size_t node_budget) {
    EntailmentOracle oracle(node_budget);
    return residue(y, oracle).kept;
}

PicResult prime_implicates(const Cnf& u, const PicConfig& cfg) {
    EntailmentOracle oracle(cfg.tableau_node_budget);
    return prime_implicates(u, cfg, oracle);
}

PicResult prime_implicates(const Cnf& u, const PicConfig& cfg, EntailmentOracle& oracle) {
    PicResult result;
    std::vector<Clause> current;
    for (const auto& c : u.clauses()) current.push_back(reduce(simplify(c), oracle));
    current = sorted_unique(std::move(current));
    if (current.empty()) {
        result.converged = true;
        return result;
    }

    ResolutionConfig rc;
    rc.rules = cfg.rules;
    rc.max_depth = cfg.recursion_depth;
    rc.clause_budget = cfg.clause_budget;

    for (std::size_t stage = 1; stage <= cfg.max_iterations; ++stage) {
        const std::string where = "pic stage " + std::to_string(stage);
        StageRecord rec;
        rec.stage = stage;
        Residue next;
        Closure closure;
        std::map<std::string, std::string> reduced_key;
        try {
            closure = closure_step(current, rc);
            rec.closure_size = closure.clauses.size();
            std::vector<Clause> reduced;
            reduced.reserve(closure.clauses.size());
            for (const auto& c : closure.clauses) {
                reduced.push_back(reduce(c, oracle));
                reduced_key.emplace(c.key(), reduced.back().key());
            }
            next = residue(reduced, oracle);
        } catch (const BudgetExceeded& e) {
            throw e.at_stage(where);
        }
        rec.residue_size = next.kept.size();
        rec.dropped = std::move(next.dropped);
        if (cfg.keep_derivations) {
            auto prev = key_set(current);
            auto kept = key_set(next.kept);
            for (auto& d : closure.derivations) {
                const std::string& k = reduced_key.at(d.conclusion.key());
                if (kept.count(k) && !prev.count(k)) rec.derivations.push_back(std::move(d));
            }
        }
        result.trace.push_back(std::move(rec));
        result.iterations = stage;
        bool same = key_set(current) == key_set(next.kept);
        current = std::move(next.kept);
        if (same) {
            result.converged = true;
            break;
        }
    }
    result.prime_implicates = std::move(current);
    return result;
}

std::optional<Clause> answer_query(const std::vector<Clause>& pi, const Clause& q, EntailmentOracle& oracle) {
    for (const auto& d : pi)
        if (oracle.entails(d, q)) return d;
    return std::nullopt;
}

bool answer_query(const std::vector<Clause>& pi, const Clause& q, std::size_t node_budget) {
    EntailmentOracle oracle(node_budget);
    return answer_query(pi, q, oracle).has_value();
}

}  // namespace kpi
