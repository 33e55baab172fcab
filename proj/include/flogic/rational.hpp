// Exact rational truth values.

#ifndef FLOGIC_RATIONAL_HPP_
#define FLOGIC_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace flogic {

using Rational = boost::rational<std::int64_t>;

// A truth value or threshold: an exact rational in [0,1], kept in lowest terms.
class Threshold {
 public:
  Threshold() = default;
  Threshold(std::int64_t num, std::int64_t den) : Threshold(Rational(num, den)) {}
  explicit Threshold(const Rational& r) : value_(r) {
    if (r < 0 || r > 1) {
      throw std::out_of_range("threshold outside [0,1]: " + to_string(r));
    }
  }

  static Threshold zero() { return Threshold(); }
  static Threshold half() { return Threshold(1, 2); }
  static Threshold one() { return Threshold(1, 1); }

  const Rational& value() const { return value_; }
  std::int64_t numerator() const { return value_.numerator(); }
  std::int64_t denominator() const { return value_.denominator(); }

  // 1 - n
  Threshold complement() const { return Threshold(Rational(1) - value_); }

  friend bool operator==(const Threshold& a, const Threshold& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Threshold& a, const Threshold& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "a/b" always, e.g. "0/1", "3/10".
  std::string str() const { return to_string(value_); }

  static std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
  }

 private:
  Rational value_{0};
};

Threshold midpoint(const Threshold& a, const Threshold& b);

// Parses "0.6", "1", ".25" or "3/5" exactly. Throws std::invalid_argument on
// malformed text and std::out_of_range when the value leaves [0,1] or the
// literal cannot be represented.
Threshold parse_threshold(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Threshold& t);

}  // namespace flogic

#endif  // FLOGIC_RATIONAL_HPP_
