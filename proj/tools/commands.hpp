#pragma once

#include <iosfwd>
#include <stdexcept>

namespace honlb::cli {

// Bad flags, bad configuration, missing inputs: exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runs one subcommand. Returns 0 on success, 1 on a computation error and 2
// on a usage or configuration error. Data goes to `out` only when no output
// file is named; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace honlb::cli
