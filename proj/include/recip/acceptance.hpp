#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace recip {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
  double limit_seconds;
};

// Runs criteria 1..11, or only those listed in `only`.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0, const std::vector<int>& only = {});

std::string format_result(const CriterionResult& r, bool with_time = true);

}  // namespace recip
