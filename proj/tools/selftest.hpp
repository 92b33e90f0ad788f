// selftest.hpp - invariant suites behind `cyclo-cli selftest`.
#pragma once

#include <ostream>

namespace cyclo::cli {

enum class SelftestDepth { quick, full };

// Prints one line per check; true when every check passed.
bool run_selftest(SelftestDepth depth, std::ostream& out);

}  // namespace cyclo::cli
