#ifndef KPI_ERRORS_HPP
#define KPI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kpi {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::vector<std::string> expected_;
    std::string found_;
};

enum class Budget { CnfClauses, TableauNodes, RecursionDepth, ClauseCount };

const char* to_string(Budget b);

/// A configured resource cap was hit.  `stage` names where (e.g. "pic stage 3").
class BudgetExceeded : public Error {
public:
    BudgetExceeded(Budget which, std::size_t limit, std::string stage = {});

    Budget which() const { return which_; }
    std::size_t limit() const { return limit_; }
    const std::string& stage() const { return stage_; }
    BudgetExceeded at_stage(const std::string& stage) const { return BudgetExceeded(which_, limit_, stage); }

private:
    Budget which_;
    std::size_t limit_;
    std::string stage_;
};

}  // namespace kpi

#endif
