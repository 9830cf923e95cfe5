#pragma once

#include <iosfwd>

namespace flattorus {

/// Entry point of the `flattorus` command. Subcommands: build, verify,
/// geodesic, fold, export, seven, serve, sim. Output goes to `out` unless
/// --out names a file. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flattorus
