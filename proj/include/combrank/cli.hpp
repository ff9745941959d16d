#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace combrank {

// Command-line front end. args excludes the program name. Returns the
// process exit status: 0 success, 1 self-test failure, 2 usage or
// validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Embedded golden-value checks plus small exhaustive round trips; prints
// one PASS/FAIL line per check. Returns 0 iff everything passed.
int run_selftest(std::ostream& out);

}  // namespace combrank
