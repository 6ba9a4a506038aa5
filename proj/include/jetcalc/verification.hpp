#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jetcalc {

struct SuiteResult {
  std::string name;
  int instances = 0;
  bool passed = true;
  /// First failing instance, empty on success.
  std::string detail;
};

/// Runs every randomized invariant suite with a deterministic generator.
std::vector<SuiteResult> run_verification(std::uint64_t seed);

}  // namespace jetcalc
