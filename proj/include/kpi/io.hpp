// kpi/io.hpp - JSON forms and knowledge base files.
//
//   Clause      {"lits":["p","-q"], "boxes":[Clause...], "diamonds":[[Clause...]...]}
//   KripkeModel {"worlds":[...], "rel":[[w,w']...], "val":{"p":[...]}, "root":w}
//   PicResult   {"prime_implicates":[Clause...], "iterations":n, "converged":b, "trace":[...]}
//
// Object keys keep insertion order and every list is emitted in key order,
// so equal values serialise to identical bytes.

#ifndef KPI_IO_HPP
#define KPI_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kpi/clause.hpp"
#include "kpi/kripke.hpp"
#include "kpi/pic.hpp"
#include "kpi/resolution.hpp"

namespace kpi {

using Json = nlohmann::ordered_json;

Json to_json(const Clause& c);
Json to_json(const Cnf& u);
Json to_json(const KripkeModel& m);
/// One trace line: {"rule", "premises", "conclusion", "sub"}.
Json to_json(const ResolutionStep& s);
/// Stage records go under "trace"; derivations are written separately,
/// one to_json(ResolutionStep) line each.
Json to_json(const PicResult& r);

/// Throws Error on malformed input.  The result is simplified.
Clause clause_from_json(const Json& j);
std::vector<Clause> prime_implicates_from_json(const Json& j);

/// Text in the formula grammar that converts to exactly one clause.
Clause parse_clause(std::string_view text);

/// One formula per line, each converted to CNF and conjoined; '#' starts a
/// comment and blank lines are skipped.  Parse errors report the file line.
Cnf parse_kb(std::string_view text, std::size_t cnf_budget = 10000);

}  // namespace kpi

#endif
