#include "kpi/resolution.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "kpi/errors.hpp"
#include "kpi/normalize.hpp"

namespace kpi {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::A1: return "axiom-a1";
        case Rule::A1Bottom: return "axiom-a1-bottom";
        case Rule::SigmaOr: return "sigma-or";
        case Rule::SigmaBoxDiamond: return "sigma-boxdiamond";
        case Rule::SigmaBoxBox: return "sigma-boxbox";
        case Rule::SigmaBoxDiamondMerge: return "sigma-boxdiamond-merge";
        case Rule::SigmaBoxBoxMerge: return "sigma-boxbox-merge";
        case Rule::GammaDiamond1: return "gamma-diamond1";
        case Rule::GammaDiamond2: return "gamma-diamond2";
        case Rule::GammaOr: return "gamma-or";
        case Rule::GammaBox: return "gamma-box";
    }
    return "?";
}

const char* to_string(RuleSet r) { return r == RuleSet::Basic ? "basic" : "extended"; }

RuleSet rule_set_from_string(const std::string& s) {
    if (s == "basic") return RuleSet::Basic;
    if (s == "extended") return RuleSet::Extended;
    throw std::invalid_argument("unknown rule set '" + s + "'");
}

std::size_t ResolutionStep::size() const {
    std::size_t n = 1;
    for (const auto& s : sub) n += s.size();
    return n;
}

namespace {

std::string signature(const ResolutionStep& s) {
    std::string out = rule_name(s.rule);
    out += '(';
    for (const auto& p : s.premises) out += p + ';';
    for (const auto& c : s.sub) out += signature(c) + ';';
    return out + ')';
}

// Conclusion key -> smallest witness derivation.
class Witnesses {
public:
    void add(ResolutionStep step) {
        auto it = best_.find(step.conclusion.key());
        if (it == best_.end()) {
            std::string key = step.conclusion.key();
            best_.emplace(std::move(key), std::move(step));
            return;
        }
        std::size_t a = step.size(), b = it->second.size();
        if (a < b || (a == b && signature(step) < signature(it->second))) it->second = std::move(step);
    }
    std::vector<ResolutionStep> take() {
        std::vector<ResolutionStep> out;
        out.reserve(best_.size());
        for (auto& [k, s] : best_) out.push_back(std::move(s));
        return out;
    }
    std::size_t size() const { return best_.size(); }

private:
    std::map<std::string, ResolutionStep> best_;
};

Cnf with_member(const Cnf& s, const Clause& extra) {
    auto cs = s.clauses();
    cs.push_back(extra);
    return Cnf(std::move(cs));
}

class Engine {
public:
    explicit Engine(const ResolutionConfig& cfg) : cfg_(cfg) {}

    std::vector<ResolutionStep> sigma(const Clause& a, const Clause& b, std::size_t depth) {
        check_depth(depth);
        Witnesses out;
        if (a.is_bottom() || b.is_bottom()) {
            out.add({Rule::A1Bottom, {a.key(), b.key()}, Clause::bottom(), {}});
            return out.take();
        }
        for (std::size_t i = 0; i < a.component_count(); ++i) {
            Clause x = component(a, i);
            Clause rest_a = without_component(a, i);
            for (std::size_t j = 0; j < b.component_count(); ++j) {
                Clause y = component(b, j);
                Clause rest_b = without_component(b, j);
                for (auto& inner : sigma_components(x, y, depth)) {
                    if (rest_a.is_bottom() && rest_b.is_bottom()) {
                        out.add(std::move(inner));
                        continue;
                    }
                    Clause concl = simplify(disjoin(inner.conclusion, disjoin(rest_a, rest_b)));
                    out.add({Rule::SigmaOr, {a.key(), b.key()}, std::move(concl), {std::move(inner)}});
                }
            }
        }
        return out.take();
    }

    std::vector<ResolutionStep> gamma(const Clause& a, std::size_t depth) {
        check_depth(depth);
        Witnesses out;
        for (std::size_t i = 0; i < a.component_count(); ++i) {
            Clause x = component(a, i);
            Clause rest = without_component(a, i);
            for (auto& inner : gamma_component(x, depth)) {
                if (rest.is_bottom()) {
                    out.add(std::move(inner));
                    continue;
                }
                Clause concl = simplify(disjoin(inner.conclusion, rest));
                out.add({Rule::GammaOr, {a.key()}, std::move(concl), {std::move(inner)}});
            }
        }
        return out.take();
    }

private:
    void check_depth(std::size_t depth) const {
        if (depth > cfg_.max_depth) throw BudgetExceeded(Budget::RecursionDepth, cfg_.max_depth, "resolution");
    }

    bool extended() const { return cfg_.rules == RuleSet::Extended; }

    // sigma over two single-component clauses, top level of the sigma-or rule.
    std::vector<ResolutionStep> sigma_components(const Clause& x, const Clause& y, std::size_t depth) {
        std::vector<ResolutionStep> out;
        if (!x.literals().empty() && !y.literals().empty()) {
            if (x.literals().front().complement() == y.literals().front())
                out.push_back({Rule::A1, {x.key(), y.key()}, Clause::bottom(), {}});
            return out;
        }
        if (!x.boxes().empty() && !y.boxes().empty()) {
            const Clause& d = x.boxes().front();
            const Clause& e = y.boxes().front();
            for (auto& s : sigma(d, e, depth + 1)) {
                Clause concl = simplify(Clause::boxed(s.conclusion));
                out.push_back({Rule::SigmaBoxBox, {x.key(), y.key()}, std::move(concl), {std::move(s)}});
            }
            if (extended()) {
                Clause concl = simplify(Clause({}, {Clause::bottom()}, {Cnf({d, e})}));
                out.push_back({Rule::SigmaBoxBoxMerge, {x.key(), y.key()}, std::move(concl), {}});
            }
            return out;
        }
        if (!x.boxes().empty() && !y.diamonds().empty()) return box_diamond(x, y, depth);
        if (!x.diamonds().empty() && !y.boxes().empty()) return box_diamond(y, x, depth);
        return out;
    }

    std::vector<ResolutionStep> box_diamond(const Clause& bx, const Clause& dia, std::size_t depth) {
        std::vector<ResolutionStep> out;
        const Clause& d = bx.boxes().front();
        const Cnf& s = dia.diamonds().front();
        for (const auto& e : s.clauses()) {
            for (auto& r : sigma(d, e, depth + 1)) {
                Clause concl = simplify(Clause::diamond(with_member(s, r.conclusion)));
                out.push_back({Rule::SigmaBoxDiamond, {bx.key(), dia.key()}, std::move(concl), {std::move(r)}});
            }
        }
        if (extended()) {
            Clause concl = simplify(Clause::diamond(with_member(s, d)));
            out.push_back({Rule::SigmaBoxDiamondMerge, {bx.key(), dia.key()}, std::move(concl), {}});
        }
        return out;
    }

    std::vector<ResolutionStep> gamma_component(const Clause& x, std::size_t depth) {
        std::vector<ResolutionStep> out;
        if (!x.boxes().empty()) {
            for (auto& s : gamma(x.boxes().front(), depth + 1)) {
                Clause concl = simplify(Clause::boxed(s.conclusion));
                out.push_back({Rule::GammaBox, {x.key()}, std::move(concl), {std::move(s)}});
            }
            return out;
        }
        if (x.diamonds().empty()) return out;
        const Cnf& s = x.diamonds().front();
        const auto& members = s.clauses();
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                for (auto& r : sigma(members[i], members[j], depth + 1)) {
                    Clause concl = simplify(Clause::diamond(with_member(s, r.conclusion)));
                    out.push_back({Rule::GammaDiamond1, {x.key()}, std::move(concl), {std::move(r)}});
                }
            }
            for (auto& r : gamma(members[i], depth + 1)) {
                Clause concl = simplify(Clause::diamond(with_member(s, r.conclusion)));
                out.push_back({Rule::GammaDiamond2, {x.key()}, std::move(concl), {std::move(r)}});
            }
        }
        return out;
    }

    const ResolutionConfig& cfg_;
};

}  // namespace

std::vector<ResolutionStep> sigma_resolvents(const Clause& a, const Clause& b, const ResolutionConfig& cfg) {
    return Engine(cfg).sigma(a, b, 0);
}

std::vector<ResolutionStep> gamma_resolvents(const Clause& a, const ResolutionConfig& cfg) {
    return Engine(cfg).gamma(a, 0);
}

Closure closure_step(const std::vector<Clause>& u, const ResolutionConfig& cfg) {
    std::map<std::string, Clause> all;
    for (const auto& c : u) all.emplace(c.key(), c);
    std::set<std::string> is_input;
    for (const auto& c : u) is_input.insert(c.key());
    Witnesses fresh;
    auto absorb = [&](std::vector<ResolutionStep> steps) {
        for (auto& s : steps) {
            if (is_input.count(s.conclusion.key())) continue;
            all.emplace(s.conclusion.key(), s.conclusion);
            fresh.add(std::move(s));
        }
        if (all.size() > cfg.clause_budget) throw BudgetExceeded(Budget::ClauseCount, cfg.clause_budget, "closure step");
    };
    Engine engine(cfg);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j) absorb(engine.sigma(u[i], u[j], 0));
    for (const auto& c : u) absorb(engine.gamma(c, 0));

    Closure out;
    out.clauses.reserve(all.size());
    for (auto& [k, c] : all) out.clauses.push_back(std::move(c));
    out.derivations = fresh.take();
    return out;
}

}  // namespace kpi
