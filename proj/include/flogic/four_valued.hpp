// Four-valued (true / false / unknown / contradiction) propositional logic,
// its signed tableau, and the classical two-valued variant of the same
// tableau.

#ifndef FLOGIC_FOUR_VALUED_HPP_
#define FLOGIC_FOUR_VALUED_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "flogic/fuzzy_tableau.hpp"
#include "flogic/prop.hpp"

namespace flogic {

// Subset of {t, f} as a bit set: bit 0 is t, bit 1 is f.
enum class FourValue : std::uint8_t { Unknown = 0, True = 1, False = 2, Both = 3 };

inline bool has_t(FourValue v) { return (static_cast<unsigned>(v) & 1u) != 0; }
inline bool has_f(FourValue v) { return (static_cast<unsigned>(v) & 2u) != 0; }
inline FourValue make_four(bool t, bool f) { return static_cast<FourValue>((t ? 1u : 0u) | (f ? 2u : 0u)); }
const char* to_string(FourValue v);

// Total map; unmapped letters are Unknown.
class FourInterp {
 public:
  FourInterp() = default;
  FourInterp(std::initializer_list<std::pair<const std::string, FourValue>> values) : values_(values) {}

  FourValue operator()(const std::string& letter) const;
  void set(const std::string& letter, FourValue v) { values_[letter] = v; }
  const std::map<std::string, FourValue>& values() const { return values_; }

 private:
  std::map<std::string, FourValue> values_;
};

// Throws PreconditionError when `a` contains true or false.
FourValue eval4(const FourInterp& i, const Prop& a);

enum class Sign { T, NT };

struct SignedProp {
  Sign sign;
  Prop prop;

  friend bool operator==(const SignedProp&, const SignedProp&) = default;
};

inline SignedProp T(Prop a) { return {Sign::T, std::move(a)}; }
inline SignedProp NT(Prop a) { return {Sign::NT, std::move(a)}; }

// T A holds iff t is in the value of A; NT A iff it is not. Constants read
// as true = {t}, false = {f}.
bool satisfies(const FourInterp& i, const SignedProp& s);

std::string to_string(const SignedProp& s);

enum class Semantics { FourValued, TwoValued };

struct Decomposition {
  enum class Kind { Atomic, Alpha, Beta };
  Kind kind = Kind::Atomic;
  SignedProp first{Sign::T, Prop::top()};
  SignedProp second{Sign::T, Prop::top()};
};

// Alpha: T(A&B), NT(A|B); beta: T(A|B), NT(A&B). In two-valued mode T~A and
// NT~A are alpha with both components NT A and T A respectively. Signed
// literals and constants are atomic. In four-valued mode a negation over a
// compound proposition is a precondition violation.
Decomposition decompose(const SignedProp& s, Semantics semantics = Semantics::FourValued);

struct Sat4Outcome {
  bool satisfiable = false;
  FourInterp model;
  TableauStats stats;
};

// Four-valued mode rewrites every input to NNF first. Closure on T l / NT l
// for the same literal l (letter or negated letter), on T false and on NT true.
//
// Trace lines: AND4 / OR4 / CLOSE4 / COMPLETE4 in the fuzzy tableau's layout.
Sat4Outcome sat4(const std::vector<SignedProp>& s, Semantics semantics = Semantics::FourValued,
                 const TableauOptions& options = {});

bool entails4(const std::vector<Prop>& theory, const Prop& a, const TableauOptions& options = {});
bool entails2(const std::vector<Prop>& theory, const Prop& a, const TableauOptions& options = {});
bool tautology2(const Prop& a);
bool unsat2(const std::vector<Prop>& theory);

// Exhaustive enumeration over the occurring letters: 4^k interpretations for
// oracle4, 2^k classical ones for oracle2. Throws ResourceExhausted past
// `limit` interpretations.
Sat4Outcome oracle4(const std::vector<SignedProp>& s, std::uint64_t limit = 10'000'000);
Sat4Outcome oracle2(const std::vector<SignedProp>& s, std::uint64_t limit = 10'000'000);

// One signed proposition per line: "T <prop>", "NT <prop>", or a bare
// proposition meaning T. '#' starts a comment.
std::vector<SignedProp> parse_signed_list(std::string_view text);

}  // namespace flogic

#endif  // FLOGIC_FOUR_VALUED_HPP_
