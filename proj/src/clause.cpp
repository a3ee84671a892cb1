#include "kpi/clause.hpp"

#include <algorithm>

namespace kpi {

namespace {

std::string literal_text(const Literal& l) { return l.positive ? l.var : "~" + l.var; }

std::string clause_text(const std::vector<Literal>& lits, const std::vector<Clause>& boxes,
                        const std::vector<Cnf>& diamonds);

// A clause or CNF under a modal operator: bare when it is a single
// component, parenthesised otherwise.
std::string wrapped_clause(const Clause& c) {
    if (c.component_count() == 1) return c.key();
    if (c.is_bottom()) return "bot";
    return "(" + c.key() + ")";
}

std::string cnf_text(const std::vector<Clause>& clauses) {
    if (clauses.empty()) return "~bot";
    if (clauses.size() == 1) return clauses.front().key();
    std::string out;
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        if (i) out += " & ";
        out += wrapped_clause(clauses[i]);
    }
    return out;
}

std::string wrapped_cnf(const Cnf& u) {
    if (u.empty()) return "~bot";
    if (u.size() == 1) return wrapped_clause(u.clauses().front());
    return "(" + u.key() + ")";
}

std::string clause_text(const std::vector<Literal>& lits, const std::vector<Clause>& boxes,
                        const std::vector<Cnf>& diamonds) {
    std::string out;
    auto sep = [&] {
        if (!out.empty()) out += " | ";
    };
    for (const auto& l : lits) {
        sep();
        out += literal_text(l);
    }
    for (const auto& b : boxes) {
        sep();
        out += "[]" + wrapped_clause(b);
    }
    for (const auto& d : diamonds) {
        sep();
        out += "<>" + wrapped_cnf(d);
    }
    return out.empty() ? "bot" : out;
}

}  // namespace

Clause::Clause() : key_("bot") {}

Clause::Clause(std::vector<Literal> literals, std::vector<Clause> boxes, std::vector<Cnf> diamonds)
    : literals_(std::move(literals)), boxes_(std::move(boxes)), diamonds_(std::move(diamonds)) {
    key_ = clause_text(literals_, boxes_, diamonds_);
}

Clause Clause::of(Literal lit) { return Clause({std::move(lit)}, {}, {}); }
Clause Clause::boxed(Clause body) { return Clause({}, {std::move(body)}, {}); }
Clause Clause::diamond(Cnf body) { return Clause({}, {}, {std::move(body)}); }

Cnf::Cnf(std::vector<Clause> clauses) : clauses_(std::move(clauses)) { key_ = cnf_text(clauses_); }

bool Cnf::contains_bottom() const {
    return std::any_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.is_bottom(); });
}

Clause disjoin(const Clause& a, const Clause& b) {
    auto lits = a.literals();
    lits.insert(lits.end(), b.literals().begin(), b.literals().end());
    auto boxes = a.boxes();
    boxes.insert(boxes.end(), b.boxes().begin(), b.boxes().end());
    auto dias = a.diamonds();
    dias.insert(dias.end(), b.diamonds().begin(), b.diamonds().end());
    return Clause(std::move(lits), std::move(boxes), std::move(dias));
}

Clause without_component(const Clause& c, std::size_t index) {
    auto lits = c.literals();
    auto boxes = c.boxes();
    auto dias = c.diamonds();
    if (index < lits.size()) {
        lits.erase(lits.begin() + static_cast<std::ptrdiff_t>(index));
    } else if ((index -= lits.size()) < boxes.size()) {
        boxes.erase(boxes.begin() + static_cast<std::ptrdiff_t>(index));
    } else {
        index -= boxes.size();
        dias.erase(dias.begin() + static_cast<std::ptrdiff_t>(index));
    }
    return Clause(std::move(lits), std::move(boxes), std::move(dias));
}

Clause component(const Clause& c, std::size_t index) {
    if (index < c.literals().size()) return Clause::of(c.literals()[index]);
    index -= c.literals().size();
    if (index < c.boxes().size()) return Clause::boxed(c.boxes()[index]);
    return Clause::diamond(c.diamonds()[index - c.boxes().size()]);
}

Formula to_formula(const Literal& l) {
    Formula v = Formula::var(l.var);
    return l.positive ? v : Formula::negate(v);
}

Formula to_formula(const Clause& c) {
    std::vector<Formula> parts;
    for (const auto& l : c.literals()) parts.push_back(to_formula(l));
    for (const auto& b : c.boxes()) parts.push_back(Formula::box(to_formula(b)));
    for (const auto& d : c.diamonds()) parts.push_back(Formula::diamond(to_formula(d)));
    return disjunction_of(parts.begin(), parts.end());
}

Formula to_formula(const Cnf& u) {
    std::vector<Formula> parts;
    for (const auto& c : u.clauses()) parts.push_back(to_formula(c));
    return conjunction_of(parts.begin(), parts.end());
}

std::size_t length(const Clause& c) {
    if (c.is_bottom()) return 1;
    std::size_t n = c.component_count() - 1;
    for (const auto& l : c.literals()) n += l.positive ? 1 : 2;
    for (const auto& b : c.boxes()) n += 1 + length(b);
    for (const auto& d : c.diamonds()) n += 1 + length(d);
    return n;
}

std::size_t length(const Cnf& u) {
    if (u.empty()) return 2;
    std::size_t n = u.size() - 1;
    for (const auto& c : u.clauses()) n += length(c);
    return n;
}

std::size_t modal_depth(const Clause& c) {
    std::size_t d = 0;
    for (const auto& b : c.boxes()) d = std::max(d, 1 + modal_depth(b));
    for (const auto& s : c.diamonds())
        for (const auto& e : s.clauses()) d = std::max(d, 1 + modal_depth(e));
    // a diamond over the empty CNF still has depth one
    if (d == 0 && !c.diamonds().empty()) d = 1;
    return d;
}

std::string render(const Clause& c) { return c.key(); }
std::string render(const Cnf& u) { return u.key(); }

}  // namespace kpi
