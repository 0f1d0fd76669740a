#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gk {

struct CheckResult {
  std::string name;
  std::string suite;
  long cases = 0;
  long failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
};

// Suites: "padic", "reducer", "egk"; "all" runs every registered property.
std::vector<std::string> check_names(const std::string& suite);
CheckResult run_check(const std::string& name, int trials, std::uint64_t seed);
std::vector<CheckResult> run_selftest(const std::string& suite, int trials, std::uint64_t seed);

}  // namespace gk
