#ifndef GARSIDE_ERROR_HPP_
#define GARSIDE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace garside {

// Malformed input: bad tokens, atom indices out of range, non-simple words
// where a simple element is required.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different presentations (different braid index).
class PresentationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller-side precondition does not hold, e.g. a conjugacy search on
// elements that are not conjugate, or a transport from outside S_x.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal consistency check failed (a witness that does not verify).
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Brute-force enumeration refused to exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace garside

#endif  // GARSIDE_ERROR_HPP_
