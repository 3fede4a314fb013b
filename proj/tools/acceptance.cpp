// Runs every acceptance criterion at full scale and prints one line per criterion.
// Exit status is nonzero when any criterion fails.

#include <cstdio>

#include "wm/verify.hpp"

int main() {
  wm::VerifyOptions opt;
  opt.full = true;
  auto results = wm::run_verify(opt);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    std::printf("criterion %2d: %s  %s (%ld checks, %.1fs of %.0fs)\n", r.id, r.passed ? "PASS" : "FAIL",
                r.title.c_str(), r.checks, r.seconds, r.limit_seconds);
    if (!r.passed) {
      std::printf("    %s\n", r.detail.c_str());
      if (!r.reproduce.empty()) std::printf("    reproduce: %s\n", r.reproduce.c_str());
    }
  }
  return all ? 0 : 1;
}
