#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cochain_forge {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20260101;
  std::size_t samples = 100;
};

inline constexpr int kCriterionCount = 8;

/// Runs one criterion; a pass requires both the property and the time limit.
CriterionResult run_criterion(int id, const AcceptanceOptions &opts);

/// Runs the listed criteria (all when empty), reporting each as it finishes.
std::vector<CriterionResult>
run_acceptance(const AcceptanceOptions &opts, const std::vector<int> &ids = {},
               const std::function<void(const CriterionResult &)> &on_result = {});

/// "PASS criterion 3 witt-round-trip (12.3 s, limit 60 s): detail"
std::string format_result(const CriterionResult &r);

} // namespace cochain_forge
