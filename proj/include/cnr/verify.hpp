#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cnr {

struct CheckResult {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;  // first failure, or a short summary
};

/// Runs a named verification suite: "paper" (the full battery) or "quick"
/// (Petersen + gear/accordion + order-5 sweep). Throws
/// std::invalid_argument for unknown suite names.
std::vector<CheckResult> run_suite(const std::string& suite);

/// Prints one line per check; returns true iff everything passed.
bool print_suite(const std::string& suite, std::ostream& os);

}  // namespace cnr
