#include "flogic/bridges.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "flogic/errors.hpp"
#include "flogic/fuzzy_tableau.hpp"
#include "flogic/normal_form.hpp"

namespace flogic {

const char* to_string(RelationKind k) {
  switch (k) {
    case RelationKind::R:
      return "r";
    case RelationKind::A:
      return "a";
    case RelationKind::B:
      return "b";
    case RelationKind::C:
      return "c";
  }
  return "?";
}

bool scaled_entails(const Prop& a, const Prop& b, const Threshold& n) {
  if (n == Threshold::zero()) throw std::invalid_argument("scaled entailment needs n > 0");
  return entails(MetaTheory{geq(a, n)}, geq(b, n));
}

CharReport char_low(const Prop& a, const Prop& b) {
  CharReport r;
  r.tautology2_b = tautology2(b);
  r.entails4_ab = entails4({a}, b);
  r.verdict = *r.tautology2_b || *r.entails4_ab;
  return r;
}

CharReport char_high(const Prop& a, const Prop& b) {
  CharReport r;
  r.verdict = true;
  for (const auto& d : dnf_disjuncts(a)) {
    DisjunctEvidence e{d, unsat2({d}), entails4({d}, b)};
    r.verdict = r.verdict && (e.unsat2 || e.entails4);
    r.disjuncts.push_back(std::move(e));
  }
  return r;
}

CharReport char_all(const Prop& a, const Prop& b) {
  CharReport r;
  r.entails4_ab = entails4({a}, b);
  r.unsat2_a = unsat2({a});
  r.tautology2_b = tautology2(b);
  r.verdict = *r.entails4_ab || (*r.unsat2_a && *r.tautology2_b);
  return r;
}

CharReport relation(RelationKind kind, const Prop& a, const Prop& b) {
  switch (kind) {
    case RelationKind::R:
      return char_all(a, b);
    case RelationKind::A: {
      CharReport r;
      r.entails2_ab = entails2({a}, b);
      r.verdict = *r.entails2_ab;
      return r;
    }
    case RelationKind::B:
      return char_low(a, b);
    case RelationKind::C:
      return char_high(a, b);
  }
  throw std::logic_error("unknown relation kind");
}

std::optional<FuzzyInterp> relation_counterexample(RelationKind kind, const Prop& a, const Prop& b) {
  std::set<std::string> names;
  collect_letters(a, names);
  collect_letters(b, names);
  std::vector<std::string> order(names.begin(), names.end());
  const std::int64_t steps = 2 * std::max<std::int64_t>(1, static_cast<std::int64_t>(order.size()));
  const Threshold half = Threshold::half();

  auto refutes = [&](const FuzzyInterp& i) {
    Threshold va = eval_prop(i, a), vb = eval_prop(i, b);
    switch (kind) {
      case RelationKind::R:
        return va > vb;
      case RelationKind::A:
        return va.complement() < half && vb < half;
      case RelationKind::B:
        return va >= half && vb < half;
      case RelationKind::C:
        return va > half && vb <= half;
    }
    return false;
  };

  std::vector<std::int64_t> digits(order.size(), 0);
  std::uint64_t tried = 0;
  while (true) {
    if (++tried > kOracleLimit) throw ResourceExhausted("relation oracle: assignment count exceeds limit");
    FuzzyInterp i;
    for (std::size_t k = 0; k < order.size(); ++k) i.set(order[k], Threshold(digits[k], steps));
    if (refutes(i)) return i;
    std::size_t k = order.size();
    while (k > 0 && digits[k - 1] == steps) digits[--k] = 0;
    if (k == 0) return std::nullopt;
    ++digits[k - 1];
  }
}

CrispComparison compare_with_crisp(const MetaTheory& t, const MetaProp& q) {
  return {entails(t, q), entails2(crisp_theory(t), crisp(q))};
}

bool prop1_check(const MetaTheory& t, const MetaProp& q) {
  CrispComparison c = compare_with_crisp(t, q);
  return !c.fuzzy || c.classical;
}

bool prop2_check(const MetaTheory& t, const MetaProp& q) {
  for (const auto& m : t) {
    if (!is_normalised(nnf_meta(m))) throw PreconditionError("theory member is not normalised: " + to_string(m));
  }
  if (!is_normalised(nnf_meta(~q))) throw PreconditionError("negated query is not normalised: " + to_string(q));
  CrispComparison c = compare_with_crisp(t, q);
  return c.fuzzy == c.classical;
}

FuzzyInterp subnorm_model(const MetaTheory& t) {
  std::vector<MetaAtom> lits;
  std::set<std::string> names;
  for (const auto& m : t) {
    MetaProp n = nnf_meta(m);
    if (!is_sub_normalised(n)) throw PreconditionError("not sub-normalised: " + to_string(m));
    for (auto& l : meta_literals(n)) lits.push_back(std::move(l));
    for (const auto& l : letters(m)) names.insert(l);
  }

  const Threshold half = Threshold::half();
  std::optional<Rational> eps;
  for (const auto& l : lits) {
    if (!is_strict(l.rel)) continue;
    Rational slack = l.rel == Rel::GT ? half.value() - l.bound.value() : l.bound.value() - half.value();
    if (slack > 0 && (!eps || slack / 2 < *eps)) eps = slack / 2;
  }

  std::map<std::string, Rational> lo;
  for (const auto& n : names) lo[n] = 0;
  for (const auto& l : lits) {
    Rational v = l.bound.value();
    if (l.rel == Rel::GT) v += eps.value_or(0);
    else if (l.rel != Rel::GE) continue;
    if (v > lo[l.letter()]) lo[l.letter()] = v;
  }

  FuzzyInterp model;
  for (const auto& [letter, v] : lo) model.set(letter, Threshold(v));
  if (!eval_theory(model, t)) throw std::logic_error("constructed model fails the sub-normalised theory");
  return model;
}

FuzzyInterp subnorm_model(const MetaProp& m) { return subnorm_model(MetaTheory{m}); }

}  // namespace flogic
