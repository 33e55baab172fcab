// Normal forms, the crisp transform, normalisation predicates and per-letter
// bound summaries.

#ifndef FLOGIC_NORMAL_FORM_HPP_
#define FLOGIC_NORMAL_FORM_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "flogic/errors.hpp"
#include "flogic/meta.hpp"
#include "flogic/prop.hpp"

namespace flogic {

inline constexpr std::size_t kDefaultClauseLimit = 4096;

// Result is true, false, or an &/| combination of literals without constants.
Prop nnf_prop(const Prop& a);

// Naive distribution. Throws ResourceExhausted when more than `clause_limit`
// disjuncts (conjuncts for CNF) would be produced. Clause order follows
// left-to-right occurrence in the input.
Prop dnf_prop(const Prop& a, std::size_t clause_limit = kDefaultClauseLimit);
Prop cnf_prop(const Prop& a, std::size_t clause_limit = kDefaultClauseLimit);

// The disjuncts of dnf_prop(a); empty when a is equivalent to false.
std::vector<Prop> dnf_disjuncts(const Prop& a, std::size_t clause_limit = kDefaultClauseLimit);

// Pushes meta negation into relations, decomposes compound meta atoms down to
// single letters, and removes constants and trivial meta letters. The result
// is true, false, or an &/| combination of meta literals.
MetaProp nnf_meta(const MetaProp& m);
MetaTheory nnf_theory(const MetaTheory& t);

// true iff m is true, false, or an &/| tree of letter atoms.
bool is_meta_nnf(const MetaProp& m);

// All meta literals of an NNF meta proposition, in occurrence order.
// Throws PreconditionError on non-NNF input.
std::vector<MetaAtom> meta_literals(const MetaProp& m);

// [p >= n] -> p, [p <= n] -> ~p (strict forms likewise); applied to nnf_meta(m).
Prop crisp(const MetaProp& m);
std::vector<Prop> crisp_theory(const MetaTheory& t);

// Both require meta-literal NNF input; PreconditionError otherwise.
bool is_normalised(const MetaProp& m);
bool is_sub_normalised(const MetaProp& m);
bool is_sub_normalised(const MetaTheory& t);

struct LetterBounds {
  Threshold geq_max = Threshold::zero();
  Threshold gt_max = Threshold::zero();
  Threshold leq_min = Threshold::one();
  Threshold lt_min = Threshold::one();

  // max(geq_max, gt_max)
  Threshold lo() const { return geq_max < gt_max ? gt_max : geq_max; }
  // min(leq_min, lt_min)
  Threshold hi() const { return leq_min < lt_min ? leq_min : lt_min; }

  friend bool operator==(const LetterBounds&, const LetterBounds&) = default;
};

class BoundSummary {
 public:
  // Letters without occurrences report the defaults (0, 0, 1, 1).
  LetterBounds of(const std::string& letter) const;
  const std::map<std::string, LetterBounds>& entries() const { return entries_; }

  void add(const MetaAtom& literal);

 private:
  std::map<std::string, LetterBounds> entries_;
};

BoundSummary bound_summary(const MetaProp& m);
BoundSummary bound_summary(const MetaTheory& t);

}  // namespace flogic

#endif  // FLOGIC_NORMAL_FORM_HPP_
