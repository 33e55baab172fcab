// Meta propositions: boolean combinations of threshold constraints [A rel n].

#ifndef FLOGIC_META_HPP_
#define FLOGIC_META_HPP_

#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "flogic/prop.hpp"
#include "flogic/rational.hpp"

namespace flogic {

enum class Rel { GE, GT, LE, LT };

// Meta-level negation: ~[A >= n] is [A < n], ~[A <= n] is [A > n].
Rel negate(Rel r);
// Lower-bound relations (GE, GT).
inline bool is_lower(Rel r) { return r == Rel::GE || r == Rel::GT; }
inline bool is_strict(Rel r) { return r == Rel::GT || r == Rel::LT; }
const char* to_string(Rel r);
bool holds(Rel r, const Threshold& value, const Threshold& bound);

struct MetaAtom {
  Prop prop;
  Rel rel;
  Threshold bound;

  // Atom over a single letter.
  bool is_letter() const { return prop.is(Prop::Kind::Atom); }
  const std::string& letter() const { return prop.letter(); }

  friend bool operator==(const MetaAtom& a, const MetaAtom& b) {
    return a.rel == b.rel && a.bound == b.bound && a.prop == b.prop;
  }
};

class MetaProp {
 public:
  enum class Kind { Top, Bottom, Atom, Not, And, Or };

  MetaProp();

  static MetaProp top();
  static MetaProp bottom();
  static MetaProp atom(MetaAtom a);
  static MetaProp atom(Prop p, Rel r, Threshold n) { return atom(MetaAtom{std::move(p), r, n}); }
  static MetaProp negation(MetaProp m);
  static MetaProp conjunction(MetaProp a, MetaProp b);
  static MetaProp disjunction(MetaProp a, MetaProp b);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  const MetaAtom& atom() const;
  const MetaProp& operand() const;
  const MetaProp& lhs() const;
  const MetaProp& rhs() const;

  std::size_t size() const;
  std::size_t hash() const;

  friend bool operator==(const MetaProp& a, const MetaProp& b);

 private:
  struct Node;
  explicit MetaProp(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline MetaProp operator~(MetaProp m) { return MetaProp::negation(std::move(m)); }
inline MetaProp operator&(MetaProp a, MetaProp b) { return MetaProp::conjunction(std::move(a), std::move(b)); }
inline MetaProp operator|(MetaProp a, MetaProp b) { return MetaProp::disjunction(std::move(a), std::move(b)); }

inline MetaProp geq(Prop p, Threshold n) { return MetaProp::atom(std::move(p), Rel::GE, n); }
inline MetaProp gt(Prop p, Threshold n) { return MetaProp::atom(std::move(p), Rel::GT, n); }
inline MetaProp leq(Prop p, Threshold n) { return MetaProp::atom(std::move(p), Rel::LE, n); }
inline MetaProp lt(Prop p, Threshold n) { return MetaProp::atom(std::move(p), Rel::LT, n); }

// Finite, duplicate-free, insertion-ordered set of meta propositions.
class MetaTheory {
 public:
  MetaTheory() = default;
  MetaTheory(std::initializer_list<MetaProp> members);
  explicit MetaTheory(const std::vector<MetaProp>& members);

  // Returns false when an equal member is already present.
  bool insert(MetaProp m);
  MetaTheory with(MetaProp m) const;

  const std::vector<MetaProp>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  std::vector<MetaProp> members_;
};

void collect_letters(const MetaProp& m, std::set<std::string>& out);
std::set<std::string> letters(const MetaProp& m);
std::set<std::string> letters(const MetaTheory& t);

std::string to_string(const MetaAtom& a);
std::string to_string(const MetaProp& m);
std::ostream& operator<<(std::ostream& os, const MetaProp& m);

}  // namespace flogic

#endif  // FLOGIC_META_HPP_
