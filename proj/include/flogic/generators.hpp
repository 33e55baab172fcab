// Seeded random formulas for the differential and property suites.

#ifndef FLOGIC_GENERATORS_HPP_
#define FLOGIC_GENERATORS_HPP_

#include <random>
#include <vector>

#include "flogic/four_valued.hpp"
#include "flogic/fuzzy_semantics.hpp"
#include "flogic/meta.hpp"
#include "flogic/prop.hpp"

namespace flogic {

using Rng = std::mt19937_64;

struct PropShape {
  int letters = 3;  // drawn from p, q, r, s, ...
  int max_depth = 3;
  bool constants = false;
};

Prop random_prop(Rng& rng, const PropShape& shape = {});

// k/10 for k in [lo, hi].
Threshold random_tenth(Rng& rng, int lo = 0, int hi = 10);

enum class LiteralSide { Any, SubNormalised };

// A random meta literal over a single letter.
MetaProp random_meta_literal(Rng& rng, int letters, LiteralSide side = LiteralSide::Any);

// An and/or tree over exactly `literal_count` meta literals.
MetaProp random_meta_nnf(Rng& rng, int letters, int literal_count, LiteralSide side = LiteralSide::Any);

// 1 to 3 members holding at most `max_literals` literals in total.
MetaTheory random_meta_theory(Rng& rng, int letters = 3, int max_literals = 6, LiteralSide side = LiteralSide::Any);

std::vector<SignedProp> random_signed_set(Rng& rng, int letters = 3, int max_formulas = 6);

// Each letter of `names` gets an independent rational in [0,1] with the
// given denominator.
FuzzyInterp random_interp(Rng& rng, const std::vector<std::string>& names, std::int64_t denominator);

std::string letter_name(int index);

}  // namespace flogic

#endif  // FLOGIC_GENERATORS_HPP_
