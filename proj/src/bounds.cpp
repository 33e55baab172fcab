#include "flogic/bounds.hpp"

#include <set>

#include "flogic/normal_form.hpp"

namespace flogic {

std::vector<Threshold> n_sigma(const MetaTheory& t) {
  std::set<Threshold> values{Threshold::zero(), Threshold::half(), Threshold::one()};
  for (const auto& m : t) {
    for (const auto& l : meta_literals(nnf_meta(m))) {
      values.insert(is_lower(l.rel) ? l.bound : l.bound.complement());
    }
  }
  return {values.begin(), values.end()};
}

GlbResult glb(const MetaTheory& t, const Prop& a, const TableauOptions& options) {
  if (!sat(t, options).satisfiable) return {Threshold::one(), true};
  std::vector<Threshold> candidates = n_sigma(t);
  // Invariant: candidates[lo] is entailed, everything at or above hi is not.
  // [a >= 0] always holds.
  std::size_t lo = 0;
  std::size_t hi = candidates.size();
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (entails(t, geq(a, candidates[mid]), options)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {candidates[lo], false};
}

GlbResult lub(const MetaTheory& t, const Prop& a, const TableauOptions& options) {
  GlbResult dual = glb(t, nnf_prop(~a), options);
  if (dual.theory_unsat) return {Threshold::zero(), true};
  return {dual.value.complement(), false};
}

}  // namespace flogic
