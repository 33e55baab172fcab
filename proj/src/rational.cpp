#include "flogic/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace flogic {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
  std::int64_t v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
    if (v > (kMax - (c - '0')) / 10) {
      throw std::out_of_range("numeric literal too large: '" + std::string(whole) + "'");
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

Threshold midpoint(const Threshold& a, const Threshold& b) {
  return Threshold((a.value() + b.value()) / Rational(2));
}

Threshold parse_threshold(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_digits(text.substr(0, slash), text);
    std::int64_t den = parse_digits(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Threshold(Rational(num, den));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Threshold(Rational(parse_digits(text, text)));

  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part = text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
  }
  std::int64_t whole = int_part.empty() ? 0 : parse_digits(int_part, text);
  std::int64_t frac = frac_part.empty() ? 0 : parse_digits(frac_part, text);
  if (frac_part.size() > 18) throw std::out_of_range("numeric literal too precise: '" + std::string(text) + "'");
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  if (whole > 1) throw std::out_of_range("threshold outside [0,1]: '" + std::string(text) + "'");
  return Threshold(Rational(whole) + Rational(frac, scale));
}

std::ostream& operator<<(std::ostream& os, const Threshold& t) { return os << t.str(); }

}  // namespace flogic
