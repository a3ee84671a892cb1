#include "kpi/formula.hpp"

#include <algorithm>

namespace kpi {

Formula Formula::make(FormulaKind k, std::string name, const Formula* l, const Formula* r) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->name = std::move(name);
    if (l) n->lhs = std::make_shared<const Formula>(*l);
    if (r) n->rhs = std::make_shared<const Formula>(*r);
    return Formula(std::move(n));
}

Formula Formula::var(std::string name) { return make(FormulaKind::Var, std::move(name), nullptr, nullptr); }
Formula Formula::bottom() { return make(FormulaKind::Bottom, {}, nullptr, nullptr); }
Formula Formula::top() { return negate(bottom()); }
Formula Formula::negate(Formula f) { return make(FormulaKind::Not, {}, &f, nullptr); }
Formula Formula::conj(Formula a, Formula b) { return make(FormulaKind::And, {}, &a, &b); }
Formula Formula::disj(Formula a, Formula b) { return make(FormulaKind::Or, {}, &a, &b); }
Formula Formula::diamond(Formula f) { return make(FormulaKind::Diamond, {}, &f, nullptr); }
Formula Formula::box(Formula f) { return make(FormulaKind::Box, {}, &f, nullptr); }
Formula Formula::implies(Formula a, Formula b) { return disj(negate(std::move(a)), std::move(b)); }
Formula Formula::iff(Formula a, Formula b) { return conj(implies(a, b), implies(b, a)); }

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case FormulaKind::Var: return a.name() == b.name();
        case FormulaKind::Bottom: return true;
        case FormulaKind::Not:
        case FormulaKind::Diamond:
        case FormulaKind::Box: return a.lhs() == b.lhs();
        case FormulaKind::And:
        case FormulaKind::Or: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
    return false;
}

std::size_t length(const Formula& f) {
    switch (f.kind()) {
        case FormulaKind::Var:
        case FormulaKind::Bottom: return 1;
        case FormulaKind::Not:
        case FormulaKind::Diamond:
        case FormulaKind::Box: return 1 + length(f.lhs());
        case FormulaKind::And:
        case FormulaKind::Or: return 1 + length(f.lhs()) + length(f.rhs());
    }
    return 0;
}

std::size_t modal_depth(const Formula& f) {
    switch (f.kind()) {
        case FormulaKind::Var:
        case FormulaKind::Bottom: return 0;
        case FormulaKind::Not: return modal_depth(f.lhs());
        case FormulaKind::Diamond:
        case FormulaKind::Box: return 1 + modal_depth(f.lhs());
        case FormulaKind::And:
        case FormulaKind::Or: return std::max(modal_depth(f.lhs()), modal_depth(f.rhs()));
    }
    return 0;
}

namespace {

std::size_t diamonds_signed(const Formula& f, bool positive) {
    switch (f.kind()) {
        case FormulaKind::Var:
        case FormulaKind::Bottom: return 0;
        case FormulaKind::Not: return diamonds_signed(f.lhs(), !positive);
        case FormulaKind::Diamond: return (positive ? 1 : 0) + diamonds_signed(f.lhs(), positive);
        case FormulaKind::Box: return (positive ? 0 : 1) + diamonds_signed(f.lhs(), positive);
        case FormulaKind::And:
        case FormulaKind::Or: return diamonds_signed(f.lhs(), positive) + diamonds_signed(f.rhs(), positive);
    }
    return 0;
}

void collect_vars(const Formula& f, std::set<std::string>& out) {
    switch (f.kind()) {
        case FormulaKind::Var: out.insert(f.name()); return;
        case FormulaKind::Bottom: return;
        case FormulaKind::Not:
        case FormulaKind::Diamond:
        case FormulaKind::Box: collect_vars(f.lhs(), out); return;
        case FormulaKind::And:
        case FormulaKind::Or:
            collect_vars(f.lhs(), out);
            collect_vars(f.rhs(), out);
            return;
    }
}

void render_into(const Formula& f, std::string& out) {
    switch (f.kind()) {
        case FormulaKind::Var: out += f.name(); return;
        case FormulaKind::Bottom: out += "bot"; return;
        case FormulaKind::Not: out += '~'; render_into(f.lhs(), out); return;
        case FormulaKind::Diamond: out += "<>"; render_into(f.lhs(), out); return;
        case FormulaKind::Box: out += "[]"; render_into(f.lhs(), out); return;
        case FormulaKind::And:
        case FormulaKind::Or:
            out += '(';
            render_into(f.lhs(), out);
            out += f.is(FormulaKind::And) ? " & " : " | ";
            render_into(f.rhs(), out);
            out += ')';
            return;
    }
}

}  // namespace

std::size_t diamond_count_nnf(const Formula& f) { return diamonds_signed(f, true); }

std::set<std::string> variables(const Formula& f) {
    std::set<std::string> out;
    collect_vars(f, out);
    return out;
}

std::string render(const Formula& f) {
    std::string out;
    render_into(f, out);
    return out;
}

}  // namespace kpi
