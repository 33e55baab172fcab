// Greatest lower / least upper truth-value bounds of a proposition under a
// meta theory.

#ifndef FLOGIC_BOUNDS_HPP_
#define FLOGIC_BOUNDS_HPP_

#include <vector>

#include "flogic/fuzzy_tableau.hpp"
#include "flogic/meta.hpp"
#include "flogic/prop.hpp"

namespace flogic {

struct GlbResult {
  Threshold value;
  // The theory has no model; every bound is entailed vacuously.
  bool theory_unsat = false;
};

// {0, 1/2, 1} plus every lower-bound threshold n and 1-n for every
// upper-bound threshold n of nnf_meta(t), ascending.
std::vector<Threshold> n_sigma(const MetaTheory& t);

// Largest n in n_sigma(t) with t entailing [a >= n], by binary search.
// Unsatisfiable t gives (1, true).
GlbResult glb(const MetaTheory& t, const Prop& a, const TableauOptions& options = {});

// 1 - glb(t, ~a). Unsatisfiable t gives (0, true).
GlbResult lub(const MetaTheory& t, const Prop& a, const TableauOptions& options = {});

}  // namespace flogic

#endif  // FLOGIC_BOUNDS_HPP_
