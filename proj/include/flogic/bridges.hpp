// Proposition-level fuzzy entailment relations and their characterisations
// through four-valued and classical entailment.

#ifndef FLOGIC_BRIDGES_HPP_
#define FLOGIC_BRIDGES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "flogic/four_valued.hpp"
#include "flogic/fuzzy_semantics.hpp"
#include "flogic/meta.hpp"
#include "flogic/prop.hpp"

namespace flogic {

// R: I(a) <= I(b) for every I.
// A: max(1 - I(a), I(b)) >= 1/2 for every I.
// B: I(a) >= 1/2 implies I(b) >= 1/2.
// C: I(a) > 1/2 implies I(b) > 1/2.
enum class RelationKind { R, A, B, C };

const char* to_string(RelationKind k);

struct DisjunctEvidence {
  Prop disjunct;
  bool unsat2 = false;
  bool entails4 = false;
};

// Sub-facts are filled in only where the characterisation consults them.
struct CharReport {
  bool verdict = false;
  std::optional<bool> tautology2_b;
  std::optional<bool> unsat2_a;
  std::optional<bool> entails4_ab;
  std::optional<bool> entails2_ab;
  std::vector<DisjunctEvidence> disjuncts;
};

// {[a >= n]} |= [b >= n]. Throws std::invalid_argument for n = 0.
bool scaled_entails(const Prop& a, const Prop& b, const Threshold& n);

// tautology2(b) or a |=4 b.
CharReport char_low(const Prop& a, const Prop& b);

// Every DNF disjunct of a is classically unsatisfiable or four-valued
// entails b. Throws ResourceExhausted past the clause cap.
CharReport char_high(const Prop& a, const Prop& b);

// a |=4 b, or a classically unsatisfiable and b a classical tautology.
CharReport char_all(const Prop& a, const Prop& b);

CharReport relation(RelationKind kind, const Prop& a, const Prop& b);

// Brute force over the grid {j / 2k}, k the number of letters of a and b.
// The grid keeps the relative order of all letter values, their complements
// and 1/2, so it decides all four relations. Returns a refuting
// interpretation, or nothing when the relation holds.
std::optional<FuzzyInterp> relation_counterexample(RelationKind kind, const Prop& a, const Prop& b);

// Both sides of the fuzzy / classical comparison for a theory and query.
struct CrispComparison {
  bool fuzzy = false;      // t |= q
  bool classical = false;  // crisp(t) |=2 crisp(q)
};

CrispComparison compare_with_crisp(const MetaTheory& t, const MetaProp& q);

// Fuzzy entailment implies classical entailment of the crisp forms.
bool prop1_check(const MetaTheory& t, const MetaProp& q);

// Fuzzy and classical entailment agree. Requires every member of t and
// nnf_meta(~q) to be normalised; throws PreconditionError otherwise.
bool prop2_check(const MetaTheory& t, const MetaProp& q);

// A model of a sub-normalised theory: each letter gets its largest lower
// bound, pushed above strict lower bounds by eps, where eps is half the
// smallest distance from a strict bound to 1/2. Throws PreconditionError
// when the input is not sub-normalised.
FuzzyInterp subnorm_model(const MetaTheory& t);
FuzzyInterp subnorm_model(const MetaProp& m);

}  // namespace flogic

#endif  // FLOGIC_BRIDGES_HPP_
