// Text front end.
//
//   prop  := "true" | "false" | IDENT | "~" prop | prop "&" prop | prop "|" prop | "(" prop ")"
//   meta  := "true" | "false" | "[" prop REL num "]" | "~" meta | meta "&" meta
//          | meta "|" meta | "(" meta ")"
//   REL   := ">=" | "<=" | ">" | "<" | "="
//   num   := decimal literal (0.6) | INT "/" INT
//
// Precedence ~ > & > |; binary operators are left-associative.
// "[A = n]" expands to "[A <= n] & [A >= n]" at parse time.

#ifndef FLOGIC_PARSER_HPP_
#define FLOGIC_PARSER_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "flogic/meta.hpp"
#include "flogic/prop.hpp"

namespace flogic {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

Prop parse_prop(std::string_view text);
MetaProp parse_meta(std::string_view text);

// One meta proposition per line; '#' starts a comment; blank lines ignored.
MetaTheory parse_theory(std::string_view text);
// One proposition per line, same comment rules.
std::vector<Prop> parse_prop_list(std::string_view text);

}  // namespace flogic

#endif  // FLOGIC_PARSER_HPP_
