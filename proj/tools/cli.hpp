// tools/cli.hpp - the kpi command line, callable from tests.

#ifndef KPI_TOOLS_CLI_HPP
#define KPI_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kpi::cli {

enum Exit : int { Ok = 0, False = 1, Usage = 2, BudgetHit = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kpi::cli

#endif
