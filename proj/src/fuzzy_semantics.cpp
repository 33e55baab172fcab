#include "flogic/fuzzy_semantics.hpp"

#include <algorithm>
#include <set>

#include "flogic/errors.hpp"
#include "flogic/normal_form.hpp"

namespace flogic {

Threshold FuzzyInterp::operator()(const std::string& letter) const {
  auto it = values_.find(letter);
  return it == values_.end() ? Threshold::zero() : it->second;
}

Threshold eval_prop(const FuzzyInterp& i, const Prop& a) {
  switch (a.kind()) {
    case Prop::Kind::Top:
      return Threshold::one();
    case Prop::Kind::Bottom:
      return Threshold::zero();
    case Prop::Kind::Atom:
      return i(a.letter());
    case Prop::Kind::Not:
      return eval_prop(i, a.operand()).complement();
    case Prop::Kind::And:
      return std::min(eval_prop(i, a.lhs()), eval_prop(i, a.rhs()));
    case Prop::Kind::Or:
      return std::max(eval_prop(i, a.lhs()), eval_prop(i, a.rhs()));
  }
  return Threshold::zero();
}

bool eval_meta(const FuzzyInterp& i, const MetaProp& m) {
  switch (m.kind()) {
    case MetaProp::Kind::Top:
      return true;
    case MetaProp::Kind::Bottom:
      return false;
    case MetaProp::Kind::Atom:
      return holds(m.atom().rel, eval_prop(i, m.atom().prop), m.atom().bound);
    case MetaProp::Kind::Not:
      return !eval_meta(i, m.operand());
    case MetaProp::Kind::And:
      return eval_meta(i, m.lhs()) && eval_meta(i, m.rhs());
    case MetaProp::Kind::Or:
      return eval_meta(i, m.lhs()) || eval_meta(i, m.rhs());
  }
  return false;
}

bool eval_theory(const FuzzyInterp& i, const MetaTheory& t) {
  return std::all_of(t.begin(), t.end(), [&](const MetaProp& m) { return eval_meta(i, m); });
}

ValueGrid grid(const MetaTheory& t, const std::vector<Threshold>& extra) {
  std::set<Threshold> base{Threshold::zero(), Threshold::one()};
  auto add = [&](const Threshold& v) {
    base.insert(v);
    base.insert(v.complement());
  };
  for (const auto& m : t) {
    for (const auto& l : meta_literals(nnf_meta(m))) add(l.bound);
  }
  for (const auto& v : extra) add(v);

  ValueGrid out;
  out.reserve(2 * base.size());
  for (auto it = base.begin(); it != base.end(); ++it) {
    if (it != base.begin()) out.push_back(midpoint(*std::prev(it), *it));
    out.push_back(*it);
  }
  return out;
}

Threshold snap(const ValueGrid& g, const Threshold& v) {
  // Base points sit at even indices, midpoints at odd ones.
  auto it = std::lower_bound(g.begin(), g.end(), v);
  std::size_t idx = static_cast<std::size_t>(it - g.begin());
  if (idx % 2 == 0 && it != g.end() && *it == v) return v;
  std::size_t upper_base = idx % 2 == 0 ? idx : idx + 1;
  return g[upper_base - 1];
}

OracleOutcome oracle_sat(const MetaTheory& t, std::uint64_t limit) {
  MetaTheory nnf = nnf_theory(t);
  ValueGrid g = grid(nnf);
  const std::set<std::string> letter_set = letters(nnf);
  std::vector<std::string> names(letter_set.begin(), letter_set.end());

  std::uint64_t total = 1;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (total > limit / g.size()) throw ResourceExhausted("grid oracle: enumeration exceeds limit");
    total *= g.size();
  }

  OracleOutcome out;
  std::vector<std::size_t> digits(names.size(), 0);
  FuzzyInterp interp;
  for (const auto& n : names) interp.set(n, g.front());
  for (;;) {
    ++out.assignments_tried;
    if (eval_theory(interp, nnf)) {
      out.satisfiable = true;
      out.model = interp;
      return out;
    }
    // Odometer: last letter varies fastest.
    std::size_t pos = names.size();
    while (pos > 0) {
      --pos;
      if (++digits[pos] < g.size()) {
        interp.set(names[pos], g[digits[pos]]);
        break;
      }
      digits[pos] = 0;
      interp.set(names[pos], g.front());
      if (pos == 0) return out;
    }
    if (names.empty()) return out;
  }
}

bool oracle_entails(const MetaTheory& t, const MetaProp& query, std::uint64_t limit) {
  return !oracle_sat(t.with(nnf_meta(~query)), limit).satisfiable;
}

}  // namespace flogic
