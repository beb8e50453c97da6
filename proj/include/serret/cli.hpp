// Command-line frontend. Exposed as a function over argument vectors and
// streams so tests can drive it in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace serret {

// Dispatches one invocation. args excludes the program name, e.g.
// {"--json", "expand", "sqrt(2)"}. Results go to out, diagnostics to err.
// Returns 0 on success, 1 when `eq` decides "not equivalent", 2 on parse,
// domain or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace serret
