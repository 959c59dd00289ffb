#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fencetri {

/// Run the fencetri command line. `args` excludes the program name.
/// Exit codes: 0 success / all checks pass, 1 usage or input error,
/// 2 verification failure (cross-method disagreement or failed identity),
/// 3 guard exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fencetri
