#include "kpi/errors.hpp"

namespace kpi {

namespace {

std::string parse_message(std::size_t line, std::size_t column, const std::vector<std::string>& expected,
                          const std::string& found) {
    std::string msg = "syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": found " + found;
    if (!expected.empty()) {
        msg += ", expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) msg += i + 1 == expected.size() ? " or " : ", ";
            msg += expected[i];
        }
    }
    return msg;
}

std::string budget_message(Budget which, std::size_t limit, const std::string& stage) {
    std::string msg = std::string(to_string(which)) + " budget of " + std::to_string(limit) + " exceeded";
    if (!stage.empty()) msg += " (" + stage + ")";
    return msg;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found)
    : Error(parse_message(line, column, expected, found)), line_(line), column_(column), expected_(std::move(expected)), found_(std::move(found)) {}

const char* to_string(Budget b) {
    switch (b) {
        case Budget::CnfClauses: return "cnf clause";
        case Budget::TableauNodes: return "tableau node";
        case Budget::RecursionDepth: return "resolution recursion depth";
        case Budget::ClauseCount: return "clause count";
    }
    return "unknown";
}

BudgetExceeded::BudgetExceeded(Budget which, std::size_t limit, std::string stage)
    : Error(budget_message(which, limit, stage)), which_(which), limit_(limit), stage_(std::move(stage)) {}

}  // namespace kpi
