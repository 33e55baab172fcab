#ifndef FLOGIC_ERRORS_HPP_
#define FLOGIC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace flogic {

// A size or enumeration guard was exceeded. The input is valid; the
// computation was refused.
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input violates an operation's precondition (e.g. not in NNF).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace flogic

#endif  // FLOGIC_ERRORS_HPP_
