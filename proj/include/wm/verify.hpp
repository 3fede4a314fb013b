#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wm/config.hpp"

namespace wm {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  long checks = 0;
  std::string detail;     // first mismatch, or a summary of what was checked
  std::string reproduce;  // CLI command reproducing the first mismatch
};

struct VerifyOptions {
  bool full = false;    // adds the Monte Carlo criterion
  bool mutate = false;  // routes proper powers to the cycle-free formula
  std::vector<int> only;
  std::uint64_t seed = 20240611;
  long samples = 100000;
  Guards guards;
};

int num_criteria();
std::vector<CriterionResult> run_verify(const VerifyOptions& options);

}  // namespace wm
