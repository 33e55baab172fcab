// Propositions of the object language: letters combined with ~, &, | and
// the constants true/false.

#ifndef FLOGIC_PROP_HPP_
#define FLOGIC_PROP_HPP_

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace flogic {

// [a-zA-Z][a-zA-Z0-9_]*, excluding the keywords "true" and "false".
bool is_valid_letter(std::string_view name);

class Prop {
 public:
  enum class Kind { Top, Bottom, Atom, Not, And, Or };

  // Default-constructed Prop is Top.
  Prop();

  static Prop top();
  static Prop bottom();
  // Throws std::invalid_argument for malformed names.
  static Prop atom(std::string_view name);
  static Prop negation(Prop a);
  static Prop conjunction(Prop a, Prop b);
  static Prop disjunction(Prop a, Prop b);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  bool is_constant() const { return is(Kind::Top) || is(Kind::Bottom); }
  // p or ~p
  bool is_literal() const;

  // Atom only.
  const std::string& letter() const;
  // Not only.
  const Prop& operand() const;
  // And / Or only.
  const Prop& lhs() const;
  const Prop& rhs() const;

  std::size_t size() const;
  std::size_t hash() const;

  friend bool operator==(const Prop& a, const Prop& b);

 private:
  struct Node;
  explicit Prop(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline Prop operator~(Prop a) { return Prop::negation(std::move(a)); }
inline Prop operator&(Prop a, Prop b) { return Prop::conjunction(std::move(a), std::move(b)); }
inline Prop operator|(Prop a, Prop b) { return Prop::disjunction(std::move(a), std::move(b)); }

void collect_letters(const Prop& a, std::set<std::string>& out);
std::set<std::string> letters(const Prop& a);

// Minimal parenthesisation for the grammar's precedence (~ > & > |, binary
// operators left-associative); the output reparses to an equal tree.
std::string to_string(const Prop& a);
std::ostream& operator<<(std::ostream& os, const Prop& a);

}  // namespace flogic

template <>
struct std::hash<flogic::Prop> {
  std::size_t operator()(const flogic::Prop& p) const noexcept { return p.hash(); }
};

#endif  // FLOGIC_PROP_HPP_
