#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "rabbit/acceptance.hpp"

// Runs every acceptance criterion, or only the ids given on the command line.
int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
  if (ids.empty()) ids = rabbit::acceptance_ids();
  const auto results = rabbit::run_acceptance(ids, std::cout);
  const auto passed = std::count_if(results.begin(), results.end(),
                                    [](const rabbit::CriterionResult& r) { return r.passed; });
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<long>(results.size()) ? EXIT_SUCCESS : EXIT_FAILURE;
}
