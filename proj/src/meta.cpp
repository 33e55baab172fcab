#include "flogic/meta.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace flogic {

struct MetaProp::Node {
  Kind kind;
  MetaAtom atom;
  MetaProp lhs;  // operand for Not
  MetaProp rhs;
  std::size_t size;
  std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const MetaAtom& no_atom() {
  static const MetaAtom a{Prop::top(), Rel::GE, Threshold::zero()};
  return a;
}

}  // namespace

Rel negate(Rel r) {
  switch (r) {
    case Rel::GE:
      return Rel::LT;
    case Rel::GT:
      return Rel::LE;
    case Rel::LE:
      return Rel::GT;
    case Rel::LT:
      return Rel::GE;
  }
  return r;
}

const char* to_string(Rel r) {
  switch (r) {
    case Rel::GE:
      return ">=";
    case Rel::GT:
      return ">";
    case Rel::LE:
      return "<=";
    case Rel::LT:
      return "<";
  }
  return "?";
}

bool holds(Rel r, const Threshold& value, const Threshold& bound) {
  switch (r) {
    case Rel::GE:
      return value >= bound;
    case Rel::GT:
      return value > bound;
    case Rel::LE:
      return value <= bound;
    case Rel::LT:
      return value < bound;
  }
  return false;
}

MetaProp::MetaProp() : MetaProp(top()) {}

MetaProp MetaProp::top() {
  static const MetaProp t(std::make_shared<const Node>(Node{Kind::Top, no_atom(), MetaProp(nullptr), MetaProp(nullptr), 1, 0x71}));
  return t;
}

MetaProp MetaProp::bottom() {
  static const MetaProp b(std::make_shared<const Node>(Node{Kind::Bottom, no_atom(), MetaProp(nullptr), MetaProp(nullptr), 1, 0x72}));
  return b;
}

MetaProp MetaProp::atom(MetaAtom a) {
  std::size_t h = mix(mix(mix(0x73, a.prop.hash()), static_cast<std::size_t>(a.rel)),
                      std::hash<std::int64_t>{}(a.bound.numerator() * 1000003 + a.bound.denominator()));
  std::size_t size = a.prop.size() + 1;
  return MetaProp(std::make_shared<const Node>(Node{Kind::Atom, std::move(a), MetaProp(nullptr), MetaProp(nullptr), size, h}));
}

MetaProp MetaProp::negation(MetaProp m) {
  std::size_t size = m.size() + 1;
  std::size_t h = mix(0x74, m.hash());
  return MetaProp(std::make_shared<const Node>(Node{Kind::Not, no_atom(), std::move(m), MetaProp(nullptr), size, h}));
}

MetaProp MetaProp::conjunction(MetaProp a, MetaProp b) {
  std::size_t size = a.size() + b.size() + 1;
  std::size_t h = mix(mix(0x75, a.hash()), b.hash());
  return MetaProp(std::make_shared<const Node>(Node{Kind::And, no_atom(), std::move(a), std::move(b), size, h}));
}

MetaProp MetaProp::disjunction(MetaProp a, MetaProp b) {
  std::size_t size = a.size() + b.size() + 1;
  std::size_t h = mix(mix(0x76, a.hash()), b.hash());
  return MetaProp(std::make_shared<const Node>(Node{Kind::Or, no_atom(), std::move(a), std::move(b), size, h}));
}

MetaProp::Kind MetaProp::kind() const { return node_->kind; }

const MetaAtom& MetaProp::atom() const {
  if (!is(Kind::Atom)) throw std::logic_error("atom() on non-atom meta proposition");
  return node_->atom;
}

const MetaProp& MetaProp::operand() const {
  if (!is(Kind::Not)) throw std::logic_error("operand() on non-negation");
  return node_->lhs;
}

const MetaProp& MetaProp::lhs() const {
  if (!is(Kind::And) && !is(Kind::Or)) throw std::logic_error("lhs() on non-binary node");
  return node_->lhs;
}

const MetaProp& MetaProp::rhs() const {
  if (!is(Kind::And) && !is(Kind::Or)) throw std::logic_error("rhs() on non-binary node");
  return node_->rhs;
}

std::size_t MetaProp::size() const { return node_->size; }
std::size_t MetaProp::hash() const { return node_->hash; }

bool operator==(const MetaProp& a, const MetaProp& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case MetaProp::Kind::Top:
    case MetaProp::Kind::Bottom:
      return true;
    case MetaProp::Kind::Atom:
      return a.atom() == b.atom();
    case MetaProp::Kind::Not:
      return a.operand() == b.operand();
    case MetaProp::Kind::And:
    case MetaProp::Kind::Or:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

MetaTheory::MetaTheory(std::initializer_list<MetaProp> members) {
  for (const auto& m : members) insert(m);
}

MetaTheory::MetaTheory(const std::vector<MetaProp>& members) {
  for (const auto& m : members) insert(m);
}

bool MetaTheory::insert(MetaProp m) {
  if (std::find(members_.begin(), members_.end(), m) != members_.end()) return false;
  members_.push_back(std::move(m));
  return true;
}

MetaTheory MetaTheory::with(MetaProp m) const {
  MetaTheory t = *this;
  t.insert(std::move(m));
  return t;
}

void collect_letters(const MetaProp& m, std::set<std::string>& out) {
  switch (m.kind()) {
    case MetaProp::Kind::Top:
    case MetaProp::Kind::Bottom:
      return;
    case MetaProp::Kind::Atom:
      collect_letters(m.atom().prop, out);
      return;
    case MetaProp::Kind::Not:
      collect_letters(m.operand(), out);
      return;
    case MetaProp::Kind::And:
    case MetaProp::Kind::Or:
      collect_letters(m.lhs(), out);
      collect_letters(m.rhs(), out);
      return;
  }
}

std::set<std::string> letters(const MetaProp& m) {
  std::set<std::string> out;
  collect_letters(m, out);
  return out;
}

std::set<std::string> letters(const MetaTheory& t) {
  std::set<std::string> out;
  for (const auto& m : t) collect_letters(m, out);
  return out;
}

std::string to_string(const MetaAtom& a) {
  return "[" + to_string(a.prop) + " " + to_string(a.rel) + " " + a.bound.str() + "]";
}

namespace {

int precedence(const MetaProp& m) {
  switch (m.kind()) {
    case MetaProp::Kind::Or:
      return 1;
    case MetaProp::Kind::And:
      return 2;
    default:
      return 3;
  }
}

void print(std::string& out, const MetaProp& m) {
  switch (m.kind()) {
    case MetaProp::Kind::Top:
      out += "true";
      return;
    case MetaProp::Kind::Bottom:
      out += "false";
      return;
    case MetaProp::Kind::Atom:
      out += to_string(m.atom());
      return;
    case MetaProp::Kind::Not: {
      out += '~';
      bool paren = precedence(m.operand()) < 3;
      if (paren) out += '(';
      print(out, m.operand());
      if (paren) out += ')';
      return;
    }
    case MetaProp::Kind::And:
    case MetaProp::Kind::Or: {
      int prec = precedence(m);
      bool lparen = precedence(m.lhs()) < prec;
      bool rparen = precedence(m.rhs()) <= prec;
      if (lparen) out += '(';
      print(out, m.lhs());
      if (lparen) out += ')';
      out += m.is(MetaProp::Kind::And) ? " & " : " | ";
      if (rparen) out += '(';
      print(out, m.rhs());
      if (rparen) out += ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const MetaProp& m) {
  std::string out;
  print(out, m);
  return out;
}

std::ostream& operator<<(std::ostream& os, const MetaProp& m) { return os << to_string(m); }

}  // namespace flogic
