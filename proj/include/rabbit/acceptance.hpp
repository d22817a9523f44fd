#pragma once

// End-to-end acceptance checks, shared by the acceptance test binary and the
// `rabbit selftest` command. Every threshold lives in acceptance.cpp.

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace rabbit {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Ids 1..8.
std::vector<int> acceptance_ids();

/// Runs one criterion; exceptions are caught and reported as failures.
CriterionResult run_criterion(int id);

/// "[PASS] 1. Census reproduction (3.21 s) -- detail"
std::string format_result(const CriterionResult& r);

/// Runs `ids` in order, writing one line per criterion to `out` as it finishes.
std::vector<CriterionResult> run_acceptance(std::span<const int> ids, std::ostream& out);

}  // namespace rabbit
