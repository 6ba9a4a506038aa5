#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jetcalc {

/// Command-line entry point. Returns 0 on success, 1 when a check finds a
/// nonzero residual and 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetcalc
