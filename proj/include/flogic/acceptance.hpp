// Regression checks on the worked examples and seeded randomised suites.
// Shared by the acceptance test binary and `flogic check`.

#ifndef FLOGIC_ACCEPTANCE_HPP_
#define FLOGIC_ACCEPTANCE_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace flogic {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<std::string> notes;  // per sub-check tallies, counterexamples
};

struct SuiteSizes {
  int fuzzy_fuzz = 1000;
  int four_fuzz = 1000;
  int theorem_pairs = 500;
  int bounds_instances = 500;
  int subnorm_instances = 500;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Criteria 1-5.
std::vector<CriterionResult> run_worked_suite();

// Criteria 6-10.
std::vector<CriterionResult> run_random_suite(std::uint64_t seed = kDefaultSeed, const SuiteSizes& sizes = {});

// "PASS [3] name: detail" plus indented notes.
void print_results(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace flogic

#endif  // FLOGIC_ACCEPTANCE_HPP_
