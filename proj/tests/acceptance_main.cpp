// Runs every acceptance criterion and prints one line per criterion.
#include <iostream>

#include "flogic/acceptance.hpp"

int main() {
  auto results = flogic::run_worked_suite();
  auto random = flogic::run_random_suite();
  results.insert(results.end(), random.begin(), random.end());
  flogic::print_results(std::cout, results);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
