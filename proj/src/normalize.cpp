#include "kpi/normalize.hpp"

#include <algorithm>
#include <set>

namespace kpi {

namespace {

bool is_bottom_set(const Cnf& u) { return u.size() == 1 && u.clauses().front().is_bottom(); }

template <class T>
void sort_unique_by_key(std::vector<T>& v) {
    std::sort(v.begin(), v.end(), [](const T& a, const T& b) { return a.key() < b.key(); });
    v.erase(std::unique(v.begin(), v.end(), [](const T& a, const T& b) { return a.key() == b.key(); }), v.end());
}

}  // namespace

std::string set_key(const Cnf& u) {
    std::vector<std::string> keys;
    for (const auto& c : u.clauses()) keys.push_back(set_key(c));
    std::sort(keys.begin(), keys.end());
    std::string out = "{";
    for (const auto& k : keys) out += k + ";";
    return out + "}";
}

std::string set_key(const Clause& c) {
    auto lits = c.literals();
    std::sort(lits.begin(), lits.end());
    std::vector<std::string> boxes, dias;
    for (const auto& b : c.boxes()) boxes.push_back(set_key(b));
    for (const auto& d : c.diamonds()) dias.push_back(set_key(d));
    std::sort(boxes.begin(), boxes.end());
    std::sort(dias.begin(), dias.end());
    std::string out = "(";
    for (const auto& l : lits) out += (l.positive ? "+" : "-") + l.var + ",";
    out += "|";
    for (const auto& b : boxes) out += "[]" + b + ",";
    out += "|";
    for (const auto& d : dias) out += "<>" + d + ",";
    return out + ")";
}

namespace {

template <class T>
std::vector<T> erase_at(std::vector<T> v, std::size_t i) {
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
    return v;
}

template <class T>
std::vector<T> replace_at(std::vector<T> v, std::size_t i, T x) {
    v[i] = std::move(x);
    return v;
}

}  // namespace

Clause simplify(const Clause& c) {
    auto lits = c.literals();
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());

    std::vector<Clause> boxes;
    boxes.reserve(c.boxes().size());
    for (const auto& b : c.boxes()) boxes.push_back(simplify(b));
    sort_unique_by_key(boxes);

    std::vector<Cnf> dias;
    for (const auto& d : c.diamonds()) {
        Cnf s = simplify(d);
        if (!is_bottom_set(s)) dias.push_back(std::move(s));
    }
    sort_unique_by_key(dias);
    return Clause(std::move(lits), std::move(boxes), std::move(dias));
}

Cnf simplify(const Cnf& u) {
    std::vector<Clause> out;
    out.reserve(u.size());
    for (const auto& c : u.clauses()) {
        Clause s = simplify(c);
        if (s.is_bottom()) return Cnf({Clause::bottom()});
        out.push_back(std::move(s));
    }
    sort_unique_by_key(out);
    return Cnf(std::move(out));
}

bool is_normal(const Clause& c) { return simplify(c) == c; }

std::vector<Cnf> rewrite_steps(const Cnf& u) {
    std::vector<Cnf> out;
    const auto& cs = u.clauses();
    if (u.contains_bottom() && cs.size() > 1) out.emplace_back(std::vector<Clause>{Clause::bottom()});
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (set_key(cs[i]) == set_key(cs[j])) out.emplace_back(erase_at(cs, j));
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (auto& r : rewrite_steps(cs[i])) out.emplace_back(replace_at(cs, i, std::move(r)));
    return out;
}

std::vector<Clause> rewrite_steps(const Clause& c) {
    std::vector<Clause> out;
    const auto& lits = c.literals();
    const auto& boxes = c.boxes();
    const auto& dias = c.diamonds();

    for (std::size_t i = 0; i < lits.size(); ++i)
        for (std::size_t j = i + 1; j < lits.size(); ++j)
            if (lits[i] == lits[j]) out.emplace_back(erase_at(lits, j), boxes, dias);
    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (std::size_t j = i + 1; j < boxes.size(); ++j)
            if (set_key(boxes[i]) == set_key(boxes[j])) out.emplace_back(lits, erase_at(boxes, j), dias);
    for (std::size_t i = 0; i < dias.size(); ++i)
        for (std::size_t j = i + 1; j < dias.size(); ++j)
            if (set_key(dias[i]) == set_key(dias[j])) out.emplace_back(lits, boxes, erase_at(dias, j));
    // <>bot ~> bot, then bot | D ~> D
    for (std::size_t i = 0; i < dias.size(); ++i)
        if (is_bottom_set(dias[i])) out.emplace_back(lits, boxes, erase_at(dias, i));

    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (auto& r : rewrite_steps(boxes[i])) out.emplace_back(lits, replace_at(boxes, i, std::move(r)), dias);
    for (std::size_t i = 0; i < dias.size(); ++i)
        for (auto& r : rewrite_steps(dias[i])) out.emplace_back(lits, boxes, replace_at(dias, i, std::move(r)));
    return out;
}

std::vector<Clause> sorted_unique(std::vector<Clause> clauses) {
    sort_unique_by_key(clauses);
    return clauses;
}

}  // namespace kpi
