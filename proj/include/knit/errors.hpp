#pragma once

#include <stdexcept>
#include <string>

namespace knit {

/// Malformed or out-of-range user input (bad graph text, vertex ids, parameters).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller broke an operation's documented precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace knit
