#pragma once

// Acceptance criteria as runnable checks. The acceptance test binary and the
// CLI's verify command both run these.

#include <string>
#include <vector>

#include "gamelab/rational.h"

namespace gamelab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;
  // Deterministic record of what the run produced; timing is kept out.
  Json data;
};

// Criteria 1..10. Criterion 10 re-runs 1..9 and compares their data.
CriterionResult run_criterion(int id);

// Runs the criteria in order; when 10 is included, results of 1..9 gathered
// here serve as the first run.
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids);

// "acceptance", "totalcond", "permgame-small", "epslev", "infodist",
// "friedberg", "determinism". Throws std::invalid_argument otherwise.
std::vector<int> suite_criteria(const std::string& suite);
const std::vector<std::string>& suite_names();

// "[PASS] 3 permgame lower bound: ... (1.23 s, limit 60 s)"
std::string format_result(const CriterionResult& result);

// FNV-1a over the bytes of `text`.
std::uint64_t fingerprint(const std::string& text);

}  // namespace gamelab
