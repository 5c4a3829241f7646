#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mono {

// Runs one CLI invocation. Deterministic JSON on `out`; structured domain
// errors as JSON on `err`. Exit status: 0 success, 1 domain/verification
// failure, 2 usage.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mono
