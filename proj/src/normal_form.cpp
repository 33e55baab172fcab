#include "flogic/normal_form.hpp"

#include <algorithm>

namespace flogic {

namespace {

Prop mk_and(Prop a, Prop b) {
  if (a.is(Prop::Kind::Bottom) || b.is(Prop::Kind::Bottom)) return Prop::bottom();
  if (a.is(Prop::Kind::Top)) return b;
  if (b.is(Prop::Kind::Top)) return a;
  return a & b;
}

Prop mk_or(Prop a, Prop b) {
  if (a.is(Prop::Kind::Top) || b.is(Prop::Kind::Top)) return Prop::top();
  if (a.is(Prop::Kind::Bottom)) return b;
  if (b.is(Prop::Kind::Bottom)) return a;
  return a | b;
}

Prop nnf(const Prop& a, bool negated) {
  switch (a.kind()) {
    case Prop::Kind::Top:
      return negated ? Prop::bottom() : Prop::top();
    case Prop::Kind::Bottom:
      return negated ? Prop::top() : Prop::bottom();
    case Prop::Kind::Atom:
      return negated ? ~a : a;
    case Prop::Kind::Not:
      return nnf(a.operand(), !negated);
    case Prop::Kind::And:
      return negated ? mk_or(nnf(a.lhs(), true), nnf(a.rhs(), true))
                     : mk_and(nnf(a.lhs(), false), nnf(a.rhs(), false));
    case Prop::Kind::Or:
      return negated ? mk_and(nnf(a.lhs(), true), nnf(a.rhs(), true))
                     : mk_or(nnf(a.lhs(), false), nnf(a.rhs(), false));
  }
  return a;
}

using Clauses = std::vector<std::vector<Prop>>;

// `outer` is the connective joining clauses (Or for DNF, And for CNF).
Clauses distribute(const Prop& a, Prop::Kind outer, std::size_t limit) {
  const Prop::Kind unit = outer == Prop::Kind::Or ? Prop::Kind::Top : Prop::Kind::Bottom;
  if (a.is(unit)) return Clauses{{}};
  if (a.is_constant()) return Clauses{};
  if (a.is_literal()) return Clauses{{a}};
  Clauses left = distribute(a.lhs(), outer, limit);
  Clauses right = distribute(a.rhs(), outer, limit);
  Clauses out;
  if (a.is(outer)) {
    if (left.size() + right.size() > limit) throw ResourceExhausted("normal form exceeds clause limit");
    out = std::move(left);
    out.insert(out.end(), right.begin(), right.end());
    return out;
  }
  if (left.size() * right.size() > limit) throw ResourceExhausted("normal form exceeds clause limit");
  out.reserve(left.size() * right.size());
  for (const auto& l : left) {
    for (const auto& r : right) {
      std::vector<Prop> c = l;
      c.insert(c.end(), r.begin(), r.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

Prop join(const std::vector<Prop>& items, Prop::Kind kind) {
  if (items.empty()) return kind == Prop::Kind::And ? Prop::top() : Prop::bottom();
  Prop out = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) {
    out = kind == Prop::Kind::And ? (out & items[i]) : (out | items[i]);
  }
  return out;
}

Prop assemble(const Clauses& clauses, Prop::Kind outer) {
  const Prop::Kind inner = outer == Prop::Kind::Or ? Prop::Kind::And : Prop::Kind::Or;
  std::vector<Prop> parts;
  parts.reserve(clauses.size());
  for (const auto& c : clauses) {
    // An empty clause is the unit of the inner connective and absorbs everything.
    if (c.empty()) return inner == Prop::Kind::And ? Prop::top() : Prop::bottom();
    parts.push_back(join(c, inner));
  }
  return join(parts, outer);
}

MetaProp mk_and(MetaProp a, MetaProp b) {
  if (a.is(MetaProp::Kind::Bottom) || b.is(MetaProp::Kind::Bottom)) return MetaProp::bottom();
  if (a.is(MetaProp::Kind::Top)) return b;
  if (b.is(MetaProp::Kind::Top)) return a;
  return a & b;
}

MetaProp mk_or(MetaProp a, MetaProp b) {
  if (a.is(MetaProp::Kind::Top) || b.is(MetaProp::Kind::Top)) return MetaProp::top();
  if (a.is(MetaProp::Kind::Bottom)) return b;
  if (b.is(MetaProp::Kind::Bottom)) return a;
  return a | b;
}

MetaProp constant(bool value) { return value ? MetaProp::top() : MetaProp::bottom(); }

// [A >= n] <-> [~A <= 1-n] and so on.
Rel mirror(Rel r) {
  switch (r) {
    case Rel::GE:
      return Rel::LE;
    case Rel::GT:
      return Rel::LT;
    case Rel::LE:
      return Rel::GE;
    case Rel::LT:
      return Rel::GT;
  }
  return r;
}

MetaProp atom_nnf(const Prop& a, Rel rel, const Threshold& n) {
  switch (a.kind()) {
    case Prop::Kind::Top:
      return constant(holds(rel, Threshold::one(), n));
    case Prop::Kind::Bottom:
      return constant(holds(rel, Threshold::zero(), n));
    case Prop::Kind::Atom:
      if ((rel == Rel::GE && n == Threshold::zero()) || (rel == Rel::LE && n == Threshold::one())) {
        return MetaProp::top();
      }
      if ((rel == Rel::GT && n == Threshold::one()) || (rel == Rel::LT && n == Threshold::zero())) {
        return MetaProp::bottom();
      }
      return MetaProp::atom(a, rel, n);
    case Prop::Kind::Not:
      return atom_nnf(a.operand(), mirror(rel), n.complement());
    case Prop::Kind::And:
      return is_lower(rel) ? mk_and(atom_nnf(a.lhs(), rel, n), atom_nnf(a.rhs(), rel, n))
                           : mk_or(atom_nnf(a.lhs(), rel, n), atom_nnf(a.rhs(), rel, n));
    case Prop::Kind::Or:
      return is_lower(rel) ? mk_or(atom_nnf(a.lhs(), rel, n), atom_nnf(a.rhs(), rel, n))
                           : mk_and(atom_nnf(a.lhs(), rel, n), atom_nnf(a.rhs(), rel, n));
  }
  return MetaProp::bottom();
}

MetaProp meta_nnf(const MetaProp& m, bool negated) {
  switch (m.kind()) {
    case MetaProp::Kind::Top:
      return constant(!negated);
    case MetaProp::Kind::Bottom:
      return constant(negated);
    case MetaProp::Kind::Atom: {
      const MetaAtom& a = m.atom();
      return atom_nnf(a.prop, negated ? negate(a.rel) : a.rel, a.bound);
    }
    case MetaProp::Kind::Not:
      return meta_nnf(m.operand(), !negated);
    case MetaProp::Kind::And:
      return negated ? mk_or(meta_nnf(m.lhs(), true), meta_nnf(m.rhs(), true))
                     : mk_and(meta_nnf(m.lhs(), false), meta_nnf(m.rhs(), false));
    case MetaProp::Kind::Or:
      return negated ? mk_and(meta_nnf(m.lhs(), true), meta_nnf(m.rhs(), true))
                     : mk_or(meta_nnf(m.lhs(), false), meta_nnf(m.rhs(), false));
  }
  return m;
}

void gather_literals(const MetaProp& m, std::vector<MetaAtom>& out) {
  switch (m.kind()) {
    case MetaProp::Kind::Top:
    case MetaProp::Kind::Bottom:
      return;
    case MetaProp::Kind::Atom:
      if (!m.atom().is_letter()) throw PreconditionError("meta atom over a compound proposition: " + to_string(m));
      out.push_back(m.atom());
      return;
    case MetaProp::Kind::Not:
      throw PreconditionError("meta negation in NNF input: " + to_string(m));
    case MetaProp::Kind::And:
    case MetaProp::Kind::Or:
      gather_literals(m.lhs(), out);
      gather_literals(m.rhs(), out);
      return;
  }
}

Prop crisp_nnf(const MetaProp& m) {
  switch (m.kind()) {
    case MetaProp::Kind::Top:
      return Prop::top();
    case MetaProp::Kind::Bottom:
      return Prop::bottom();
    case MetaProp::Kind::Atom:
      return is_lower(m.atom().rel) ? m.atom().prop : ~m.atom().prop;
    case MetaProp::Kind::Not:
      return ~crisp_nnf(m.operand());
    case MetaProp::Kind::And:
      return crisp_nnf(m.lhs()) & crisp_nnf(m.rhs());
    case MetaProp::Kind::Or:
      return crisp_nnf(m.lhs()) | crisp_nnf(m.rhs());
  }
  return Prop::top();
}

}  // namespace

Prop nnf_prop(const Prop& a) { return nnf(a, false); }

Prop dnf_prop(const Prop& a, std::size_t clause_limit) {
  return assemble(distribute(nnf_prop(a), Prop::Kind::Or, clause_limit), Prop::Kind::Or);
}

Prop cnf_prop(const Prop& a, std::size_t clause_limit) {
  return assemble(distribute(nnf_prop(a), Prop::Kind::And, clause_limit), Prop::Kind::And);
}

std::vector<Prop> dnf_disjuncts(const Prop& a, std::size_t clause_limit) {
  Clauses clauses = distribute(nnf_prop(a), Prop::Kind::Or, clause_limit);
  std::vector<Prop> out;
  out.reserve(clauses.size());
  for (const auto& c : clauses) out.push_back(join(c, Prop::Kind::And));
  return out;
}

MetaProp nnf_meta(const MetaProp& m) { return meta_nnf(m, false); }

MetaTheory nnf_theory(const MetaTheory& t) {
  MetaTheory out;
  for (const auto& m : t) out.insert(nnf_meta(m));
  return out;
}

bool is_meta_nnf(const MetaProp& m) {
  switch (m.kind()) {
    case MetaProp::Kind::Top:
    case MetaProp::Kind::Bottom:
      return true;
    case MetaProp::Kind::Atom:
      return m.atom().is_letter();
    case MetaProp::Kind::Not:
      return false;
    case MetaProp::Kind::And:
    case MetaProp::Kind::Or:
      return is_meta_nnf(m.lhs()) && is_meta_nnf(m.rhs());
  }
  return false;
}

std::vector<MetaAtom> meta_literals(const MetaProp& m) {
  std::vector<MetaAtom> out;
  gather_literals(m, out);
  return out;
}

Prop crisp(const MetaProp& m) { return crisp_nnf(nnf_meta(m)); }

std::vector<Prop> crisp_theory(const MetaTheory& t) {
  std::vector<Prop> out;
  for (const auto& m : t) out.push_back(crisp(m));
  return out;
}

bool is_normalised(const MetaProp& m) {
  const Threshold half = Threshold::half();
  for (const auto& l : meta_literals(m)) {
    bool ok = false;
    switch (l.rel) {
      case Rel::GE:
        ok = l.bound > half;
        break;
      case Rel::LE:
        ok = l.bound < half;
        break;
      case Rel::GT:
        ok = l.bound >= half;
        break;
      case Rel::LT:
        ok = l.bound <= half;
        break;
    }
    if (!ok) return false;
  }
  return true;
}

bool is_sub_normalised(const MetaProp& m) {
  const Threshold half = Threshold::half();
  for (const auto& l : meta_literals(m)) {
    bool ok = false;
    switch (l.rel) {
      case Rel::GE:
        ok = l.bound <= half;
        break;
      case Rel::LE:
        ok = l.bound >= half;
        break;
      case Rel::GT:
        ok = l.bound < half;
        break;
      case Rel::LT:
        ok = l.bound > half;
        break;
    }
    if (!ok) return false;
  }
  return true;
}

bool is_sub_normalised(const MetaTheory& t) {
  for (const auto& m : t) {
    if (!is_sub_normalised(m)) return false;
  }
  return true;
}

LetterBounds BoundSummary::of(const std::string& letter) const {
  auto it = entries_.find(letter);
  return it == entries_.end() ? LetterBounds{} : it->second;
}

void BoundSummary::add(const MetaAtom& literal) {
  LetterBounds& b = entries_[literal.letter()];
  switch (literal.rel) {
    case Rel::GE:
      b.geq_max = std::max(b.geq_max, literal.bound);
      break;
    case Rel::GT:
      b.gt_max = std::max(b.gt_max, literal.bound);
      break;
    case Rel::LE:
      b.leq_min = std::min(b.leq_min, literal.bound);
      break;
    case Rel::LT:
      b.lt_min = std::min(b.lt_min, literal.bound);
      break;
  }
}

BoundSummary bound_summary(const MetaProp& m) {
  BoundSummary s;
  for (const auto& l : meta_literals(m)) s.add(l);
  return s;
}

BoundSummary bound_summary(const MetaTheory& t) {
  BoundSummary s;
  for (const auto& m : t) {
    for (const auto& l : meta_literals(m)) s.add(l);
  }
  return s;
}

}  // namespace flogic
