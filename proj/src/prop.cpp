#include "flogic/prop.hpp"

#include <cctype>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace flogic {

struct Prop::Node {
  Kind kind;
  std::string letter;
  Prop lhs;  // operand for Not
  Prop rhs;
  std::size_t size;
  std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

bool is_valid_letter(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return name != "true" && name != "false";
}

Prop::Prop() : Prop(top()) {}

Prop Prop::top() {
  static const Prop t(std::make_shared<const Node>(Node{Kind::Top, {}, Prop(nullptr), Prop(nullptr), 1, 0x11}));
  return t;
}

Prop Prop::bottom() {
  static const Prop b(std::make_shared<const Node>(Node{Kind::Bottom, {}, Prop(nullptr), Prop(nullptr), 1, 0x22}));
  return b;
}

Prop Prop::atom(std::string_view name) {
  if (!is_valid_letter(name)) throw std::invalid_argument("invalid letter name: '" + std::string(name) + "'");
  std::size_t h = mix(0x33, std::hash<std::string_view>{}(name));
  return Prop(std::make_shared<const Node>(Node{Kind::Atom, std::string(name), Prop(nullptr), Prop(nullptr), 1, h}));
}

Prop Prop::negation(Prop a) {
  std::size_t size = a.size() + 1;
  std::size_t h = mix(0x44, a.hash());
  return Prop(std::make_shared<const Node>(Node{Kind::Not, {}, std::move(a), Prop(nullptr), size, h}));
}

Prop Prop::conjunction(Prop a, Prop b) {
  std::size_t size = a.size() + b.size() + 1;
  std::size_t h = mix(mix(0x55, a.hash()), b.hash());
  return Prop(std::make_shared<const Node>(Node{Kind::And, {}, std::move(a), std::move(b), size, h}));
}

Prop Prop::disjunction(Prop a, Prop b) {
  std::size_t size = a.size() + b.size() + 1;
  std::size_t h = mix(mix(0x66, a.hash()), b.hash());
  return Prop(std::make_shared<const Node>(Node{Kind::Or, {}, std::move(a), std::move(b), size, h}));
}

Prop::Kind Prop::kind() const { return node_->kind; }

bool Prop::is_literal() const {
  return is(Kind::Atom) || (is(Kind::Not) && operand().is(Kind::Atom));
}

const std::string& Prop::letter() const {
  if (!is(Kind::Atom)) throw std::logic_error("letter() on non-atom");
  return node_->letter;
}

const Prop& Prop::operand() const {
  if (!is(Kind::Not)) throw std::logic_error("operand() on non-negation");
  return node_->lhs;
}

const Prop& Prop::lhs() const {
  if (!is(Kind::And) && !is(Kind::Or)) throw std::logic_error("lhs() on non-binary node");
  return node_->lhs;
}

const Prop& Prop::rhs() const {
  if (!is(Kind::And) && !is(Kind::Or)) throw std::logic_error("rhs() on non-binary node");
  return node_->rhs;
}

std::size_t Prop::size() const { return node_->size; }
std::size_t Prop::hash() const { return node_->hash; }

bool operator==(const Prop& a, const Prop& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Prop::Kind::Top:
    case Prop::Kind::Bottom:
      return true;
    case Prop::Kind::Atom:
      return a.letter() == b.letter();
    case Prop::Kind::Not:
      return a.operand() == b.operand();
    case Prop::Kind::And:
    case Prop::Kind::Or:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

void collect_letters(const Prop& a, std::set<std::string>& out) {
  switch (a.kind()) {
    case Prop::Kind::Top:
    case Prop::Kind::Bottom:
      return;
    case Prop::Kind::Atom:
      out.insert(a.letter());
      return;
    case Prop::Kind::Not:
      collect_letters(a.operand(), out);
      return;
    case Prop::Kind::And:
    case Prop::Kind::Or:
      collect_letters(a.lhs(), out);
      collect_letters(a.rhs(), out);
      return;
  }
}

std::set<std::string> letters(const Prop& a) {
  std::set<std::string> out;
  collect_letters(a, out);
  return out;
}

namespace {

int precedence(const Prop& a) {
  switch (a.kind()) {
    case Prop::Kind::Or:
      return 1;
    case Prop::Kind::And:
      return 2;
    default:
      return 3;
  }
}

void print(std::string& out, const Prop& a) {
  switch (a.kind()) {
    case Prop::Kind::Top:
      out += "true";
      return;
    case Prop::Kind::Bottom:
      out += "false";
      return;
    case Prop::Kind::Atom:
      out += a.letter();
      return;
    case Prop::Kind::Not: {
      out += '~';
      bool paren = precedence(a.operand()) < 3;
      if (paren) out += '(';
      print(out, a.operand());
      if (paren) out += ')';
      return;
    }
    case Prop::Kind::And:
    case Prop::Kind::Or: {
      int prec = precedence(a);
      bool lparen = precedence(a.lhs()) < prec;
      bool rparen = precedence(a.rhs()) <= prec;
      if (lparen) out += '(';
      print(out, a.lhs());
      if (lparen) out += ')';
      out += a.is(Prop::Kind::And) ? " & " : " | ";
      if (rparen) out += '(';
      print(out, a.rhs());
      if (rparen) out += ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const Prop& a) {
  std::string out;
  print(out, a);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Prop& a) { return os << to_string(a); }

}  // namespace flogic
