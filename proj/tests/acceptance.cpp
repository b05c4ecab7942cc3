// Acceptance battery: runs the full verification suite and prints one
// PASS/FAIL line per check. Exit status 0 iff every check passed.

#include <iostream>

#include "cnr/verify.hpp"

int main() {
  const bool ok = cnr::print_suite("paper", std::cout);
  std::cout << (ok ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << std::endl;
  return ok ? 0 : 1;
}
