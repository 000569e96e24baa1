#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rso::cli {

/// Runs one subcommand. `args` excludes the program name. Returns 0 on
/// success, 2 on a usage error and 1 when the library rejects the input;
/// errors are written to `err` as a single JSON line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rso::cli
