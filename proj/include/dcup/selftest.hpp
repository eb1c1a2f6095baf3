#ifndef DCUP_SELFTEST_HPP
#define DCUP_SELFTEST_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace dcup {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;  // first few only
  double seconds = 0;
};

struct SelftestReport {
  int k_max = 0;
  std::vector<SuiteResult> suites;
  bool passed() const;
};

/// Cross-module invariant suites up to k_max (k_max >= 2). Heavy suites cap k on their own.
SelftestReport run_selftest(int k_max, int jobs = 1);

nlohmann::ordered_json to_json(const SelftestReport& r);

}  // namespace dcup

#endif
