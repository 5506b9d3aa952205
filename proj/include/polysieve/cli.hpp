#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polysieve {

/// Runs one CLI invocation. Subcommands: kpath, setpack, qdmatch, edgecolor,
/// oracle, selftest. Reports are single JSON objects on `out` with a fixed
/// key order; diagnostics go to `err`. Returns 0 on a completed decision and
/// 2 on any input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polysieve
