#pragma once

#include <string>
#include <vector>

namespace geophase::tools {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;  ///< seconds; exceeding it fails the criterion
};

/// Runs acceptance criterion `id` (1..11). Exceptions from the modules are
/// caught and reported as a failure.
CriterionResult run_criterion(int id);

/// Criteria run by `geophase selftest`.
inline const std::vector<int> kSelftestCriteria{1, 2, 3, 5};

/// One line per criterion: "[PASS] 4 ... (1.23 s) detail".
std::string format_result(const CriterionResult& r);

}  // namespace geophase::tools
