#include "kpi/io.hpp"

#include <sstream>

#include "kpi/errors.hpp"
#include "kpi/normalize.hpp"
#include "kpi/parser.hpp"

namespace kpi {

Json to_json(const Clause& c) {
    Json lits = Json::array();
    for (const auto& l : c.literals()) lits.push_back(l.positive ? l.var : "-" + l.var);
    Json boxes = Json::array();
    for (const auto& b : c.boxes()) boxes.push_back(to_json(b));
    Json dias = Json::array();
    for (const auto& d : c.diamonds()) dias.push_back(to_json(d));
    return Json{{"lits", std::move(lits)}, {"boxes", std::move(boxes)}, {"diamonds", std::move(dias)}};
}

Json to_json(const Cnf& u) {
    Json out = Json::array();
    for (const auto& c : u.clauses()) out.push_back(to_json(c));
    return out;
}

Json to_json(const KripkeModel& m) {
    Json rel = Json::array();
    for (const auto& [a, b] : m.relation) rel.push_back({a, b});
    Json val = Json::object();
    for (const auto& [v, ws] : m.valuation) val[v] = Json(std::vector<WorldId>(ws.begin(), ws.end()));
    return Json{{"worlds", std::vector<WorldId>(m.worlds.begin(), m.worlds.end())},
                {"rel", std::move(rel)},
                {"val", std::move(val)},
                {"root", m.root}};
}

Json to_json(const ResolutionStep& s) {
    Json sub = Json::array();
    for (const auto& x : s.sub) sub.push_back(to_json(x));
    return Json{{"rule", rule_name(s.rule)},
                {"premises", s.premises},
                {"conclusion", s.conclusion.key()},
                {"sub", std::move(sub)}};
}

Json to_json(const PicResult& r) {
    Json pis = Json::array();
    for (const auto& c : r.prime_implicates) pis.push_back(to_json(c));
    Json trace = Json::array();
    for (const auto& st : r.trace) {
        Json dropped = Json::array();
        for (const auto& d : st.dropped) dropped.push_back({{"clause", d.clause.key()}, {"subsumer", d.subsumer}});
        Json rec{{"stage", st.stage},
                 {"closure_size", st.closure_size},
                 {"residue_size", st.residue_size},
                 {"dropped", std::move(dropped)}};
        trace.push_back(std::move(rec));
    }
    return Json{{"prime_implicates", std::move(pis)},
                {"iterations", r.iterations},
                {"converged", r.converged},
                {"trace", std::move(trace)}};
}

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name) || !j.at(name).is_array())
        throw Error(std::string("clause JSON needs an array field '") + name + "'");
    return j.at(name);
}

Clause raw_clause(const Json& j) {
    std::vector<Literal> lits;
    for (const auto& l : field(j, "lits")) {
        if (!l.is_string()) throw Error("clause literal must be a string");
        auto s = l.get<std::string>();
        bool neg = !s.empty() && s[0] == '-';
        if (neg) s.erase(0, 1);
        if (s.empty()) throw Error("empty literal in clause JSON");
        lits.push_back({s, !neg});
    }
    std::vector<Clause> boxes;
    for (const auto& b : field(j, "boxes")) boxes.push_back(raw_clause(b));
    std::vector<Cnf> dias;
    for (const auto& d : field(j, "diamonds")) {
        if (!d.is_array()) throw Error("diamond body must be an array of clauses");
        std::vector<Clause> members;
        for (const auto& m : d) members.push_back(raw_clause(m));
        dias.emplace_back(std::move(members));
    }
    return Clause(std::move(lits), std::move(boxes), std::move(dias));
}

}  // namespace

Clause clause_from_json(const Json& j) { return simplify(raw_clause(j)); }

std::vector<Clause> prime_implicates_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("prime_implicates") || !j.at("prime_implicates").is_array())
        throw Error("compiled JSON needs a 'prime_implicates' array");
    std::vector<Clause> out;
    for (const auto& c : j.at("prime_implicates")) out.push_back(clause_from_json(c));
    return out;
}

Clause parse_clause(std::string_view text) {
    Cnf u = to_cnf(parse(text));
    if (u.size() != 1)
        throw Error("'" + std::string(text) + "' is not a single clause (it converts to " + std::to_string(u.size()) +
                    " clauses)");
    return u.clauses().front();
}

Cnf parse_kb(std::string_view text, std::size_t cnf_budget) {
    std::vector<Clause> all;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            Cnf part = to_cnf(parse(line), cnf_budget);
            all.insert(all.end(), part.clauses().begin(), part.clauses().end());
        } catch (const ParseError& e) {
            throw ParseError(lineno, e.column(), e.expected(), e.found());
        }
    }
    return simplify(Cnf(std::move(all)));
}

}  // namespace kpi
