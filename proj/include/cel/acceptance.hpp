/// @file acceptance.hpp
/// @brief The acceptance checks, shared by `celab verify` and the acceptance test binary.
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cel::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // first failing identity, or a summary on success
  double seconds = 0;
  double time_limit = 0;
};

/// Number of criteria run by run_all (1..7).
constexpr int kCriteria = 7;

/// Runs one criterion; `jobs` worker threads for the grid sweeps.
CriterionResult run_criterion(int id, int jobs = 1);
std::vector<CriterionResult> run_all(int jobs = 1);

/// "[PASS] 3 existence and uniqueness (1.23 s / 30 s): detail"
std::string format_line(const CriterionResult& r);

/// Calls body(i) for i in [0, n) on up to `jobs` threads.
void parallel_for(int n, int jobs, const std::function<void(int)>& body);

}  // namespace cel::acceptance
