// Fuzzy interpretations, evaluation, and the exhaustive grid oracle.

#ifndef FLOGIC_FUZZY_SEMANTICS_HPP_
#define FLOGIC_FUZZY_SEMANTICS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flogic/meta.hpp"
#include "flogic/prop.hpp"
#include "flogic/rational.hpp"

namespace flogic {

// Total map from letters to [0,1]; unmapped letters read as 0.
class FuzzyInterp {
 public:
  FuzzyInterp() = default;
  FuzzyInterp(std::initializer_list<std::pair<const std::string, Threshold>> values) : values_(values) {}

  Threshold operator()(const std::string& letter) const;
  void set(const std::string& letter, Threshold value) { values_[letter] = value; }
  const std::map<std::string, Threshold>& values() const { return values_; }

  friend bool operator==(const FuzzyInterp&, const FuzzyInterp&) = default;

 private:
  std::map<std::string, Threshold> values_;
};

Threshold eval_prop(const FuzzyInterp& i, const Prop& a);
bool eval_meta(const FuzzyInterp& i, const MetaProp& m);
bool eval_theory(const FuzzyInterp& i, const MetaTheory& t);

// Strictly increasing values in [0,1] containing 0 and 1, closed under
// complement, with the midpoint of every adjacent pair of base points.
using ValueGrid = std::vector<Threshold>;

// Thresholds are read from nnf_meta of every member.
ValueGrid grid(const MetaTheory& t, const std::vector<Threshold>& extra = {});

// Moves v to itself if it is a base point of the grid, otherwise to the
// midpoint of the enclosing base interval. `g` must come from grid().
Threshold snap(const ValueGrid& g, const Threshold& v);

inline constexpr std::uint64_t kOracleLimit = 10'000'000;

struct OracleOutcome {
  bool satisfiable = false;
  std::optional<FuzzyInterp> model;
  std::uint64_t assignments_tried = 0;
};

// Enumerates grid assignments to the letters (sorted by name, first letter
// most significant, grid ascending). Throws ResourceExhausted when
// |grid|^letters exceeds `limit`.
OracleOutcome oracle_sat(const MetaTheory& t, std::uint64_t limit = kOracleLimit);
bool oracle_entails(const MetaTheory& t, const MetaProp& query, std::uint64_t limit = kOracleLimit);

}  // namespace flogic

#endif  // FLOGIC_FUZZY_SEMANTICS_HPP_
