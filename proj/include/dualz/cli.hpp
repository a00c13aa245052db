#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dualz {

/// Runs the command line `args` (program name first). Returns 0 on success or
/// a true predicate, 1 on a false predicate or failed verification, 2 on
/// malformed input.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace dualz
