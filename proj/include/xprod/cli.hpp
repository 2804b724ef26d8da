#pragma once

#include <iosfwd>

namespace xprod {

// Batch driver. Subcommands: nc, mobius, moments, cumulants,
// check-freeness, verify-paper, selftest. Reports are JSON on stdout.
// Exit codes: 0 success / verdict true, 1 verdict false, 2 input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xprod
