#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nodal::cli {

// Runs one command. `args` excludes the program name. Writes a single JSON
// report (or help text) to `out` and returns the process exit code:
// 0 ok, 2 contradiction, 1 error.
int run(const std::vector<std::string>& args, std::ostream& out);

// Cache file name used by `code enumerate`.
std::string enumerate_cache_name(int length, const std::string& weights, int dim_min, int dim_max);

}  // namespace nodal::cli
