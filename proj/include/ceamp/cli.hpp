#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ceamp {

// Command-line surface. Exit codes: 0 success/pass/feasible,
// 1 fail/infeasible/unsat, 2 usage or input error, 3 solver timeout.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace ceamp
