// Prints one line per acceptance criterion; exits non-zero if any fails.

#include <iostream>

#include "gamelab/suites.h"

int main() {
  bool all = true;
  for (const gamelab::CriterionResult& r : gamelab::run_criteria(gamelab::suite_criteria("acceptance"))) {
    std::cout << gamelab::format_result(r) << std::endl;
    all = all && r.passed;
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
  return all ? 0 : 1;
}
