#include "flogic/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace flogic {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

std::string letter_name(int index) {
  static const char* kNames[] = {"p", "q", "r", "s", "u", "v", "w"};
  if (index < 7) return kNames[index];
  return "x" + std::to_string(index);
}

Prop random_prop(Rng& rng, const PropShape& shape) {
  if (shape.max_depth <= 0 || coin(rng, 0.3)) {
    if (shape.constants && coin(rng, 0.1)) return coin(rng, 0.5) ? Prop::top() : Prop::bottom();
    Prop a = Prop::atom(letter_name(uniform(rng, 0, shape.letters - 1)));
    return coin(rng, 0.35) ? ~a : a;
  }
  PropShape inner = shape;
  --inner.max_depth;
  switch (uniform(rng, 0, 4)) {
    case 0:
      return ~random_prop(rng, inner);
    case 1:
    case 2:
      return random_prop(rng, inner) & random_prop(rng, inner);
    default:
      return random_prop(rng, inner) | random_prop(rng, inner);
  }
}

Threshold random_tenth(Rng& rng, int lo, int hi) { return Threshold(uniform(rng, lo, hi), 10); }

MetaProp random_meta_literal(Rng& rng, int letters, LiteralSide side) {
  Prop p = Prop::atom(letter_name(uniform(rng, 0, letters - 1)));
  Rel rel = static_cast<Rel>(uniform(rng, 0, 3));
  Threshold n;
  if (side == LiteralSide::Any) {
    n = random_tenth(rng);
  } else {
    // Lower bounds at or below 1/2, upper bounds at or above; strict ones
    // keep off 1/2.
    switch (rel) {
      case Rel::GE:
        n = random_tenth(rng, 0, 5);
        break;
      case Rel::GT:
        n = random_tenth(rng, 0, 4);
        break;
      case Rel::LE:
        n = random_tenth(rng, 5, 10);
        break;
      case Rel::LT:
        n = random_tenth(rng, 6, 10);
        break;
    }
  }
  return MetaProp::atom(p, rel, n);
}

MetaProp random_meta_nnf(Rng& rng, int letters, int literal_count, LiteralSide side) {
  if (literal_count <= 1) return random_meta_literal(rng, letters, side);
  int left = uniform(rng, 1, literal_count - 1);
  MetaProp l = random_meta_nnf(rng, letters, left, side);
  MetaProp r = random_meta_nnf(rng, letters, literal_count - left, side);
  return coin(rng, 0.5) ? (l & r) : (l | r);
}

MetaTheory random_meta_theory(Rng& rng, int letters, int max_literals, LiteralSide side) {
  int budget = uniform(rng, 1, max_literals);
  int members = std::min(uniform(rng, 1, 3), budget);
  MetaTheory t;
  for (int m = 0; m < members; ++m) {
    int remaining_members = members - m - 1;
    int count = m + 1 == members ? budget : uniform(rng, 1, budget - remaining_members);
    budget -= count;
    t.insert(random_meta_nnf(rng, letters, count, side));
  }
  return t;
}

std::vector<SignedProp> random_signed_set(Rng& rng, int letters, int max_formulas) {
  std::vector<SignedProp> out;
  int n = uniform(rng, 1, max_formulas);
  for (int k = 0; k < n; ++k) {
    Prop a = random_prop(rng, {letters, 2, false});
    out.push_back({coin(rng, 0.5) ? Sign::T : Sign::NT, a});
  }
  return out;
}

FuzzyInterp random_interp(Rng& rng, const std::vector<std::string>& names, std::int64_t denominator) {
  if (denominator <= 0) throw std::invalid_argument("denominator must be positive");
  std::uniform_int_distribution<std::int64_t> d(0, denominator);
  FuzzyInterp i;
  for (const auto& n : names) i.set(n, Threshold(d(rng), denominator));
  return i;
}

}  // namespace flogic
