#pragma once

#include <set>
#include <string>
#include <vector>

namespace salemforge::cli {

struct GoldenCaseResult {
  std::string name;
  /// Acceptance criterion (1..10) the case contributes to.
  int criterion = 0;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct GoldenReport {
  std::vector<GoldenCaseResult> cases;
  bool passed() const;
  /// True when every case tagged with `criterion` passed and at least one ran.
  bool criterion_passed(int criterion) const;
};

struct GoldenOptions {
  /// Frozen table entries to corrupt before running; see golden_table_keys().
  std::set<std::string> inject;
  /// Run only cases whose name contains this text.
  std::string filter;
};

std::vector<std::string> golden_case_names();
std::vector<std::string> golden_table_keys();
std::string criterion_title(int criterion);

GoldenReport run_golden_suite(const GoldenOptions& options = {});

}  // namespace salemforge::cli
