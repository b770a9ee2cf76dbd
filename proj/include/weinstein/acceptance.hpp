#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weinstein {

struct AcceptanceOptions {
  /// Fewer random trials per criterion; grids and tolerances are unchanged.
  bool quick = false;
  std::uint64_t seed = 20240917;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  ///< measured quantities against their thresholds
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 15;

/// Runs a single criterion (1..15). Exceptions inside a check are reported as
/// a failure, not propagated.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// One line: "PASS  7  multiplier bounds ... (1.2s) detail".
std::string format_result(const CriterionResult& result);

}  // namespace weinstein
