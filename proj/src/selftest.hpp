#pragma once

#include <string>
#include <vector>

#include "common.hpp"

namespace kani {

struct CriterionResult {
  uint32_t index = 0;
  std::string name;
  bool pass = false;
  uint32_t checks = 0;  // exact equalities verified
  std::string detail;   // first failure, or empty
};

// the full acceptance battery; criterion 9 reports on anomalies raised by
// any of the others
std::vector<CriterionResult> acceptance_battery(const Options& opt = Options());

bool battery_passed(const std::vector<CriterionResult>& rs);
std::string battery_to_text(const std::vector<CriterionResult>& rs);

}  // namespace kani
