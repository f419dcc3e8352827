#pragma once

#include <stdexcept>
#include <string>

namespace repvar2 {

// Error classes shared across the library. Everything derives from
// std::runtime_error (or std::invalid_argument for caller mistakes) so
// callers can catch broadly or by exact cause.

struct NotPrimeError : std::invalid_argument {
  explicit NotPrimeError(long long p)
      : std::invalid_argument("not a prime: " + std::to_string(p)) {}
};

struct TooLargeError : std::invalid_argument {
  explicit TooLargeError(const std::string& what) : std::invalid_argument(what) {}
};

struct DivisionByZeroError : std::domain_error {
  DivisionByZeroError() : std::domain_error("inverse of zero field element") {}
};

struct FieldMismatchError : std::invalid_argument {
  FieldMismatchError() : std::invalid_argument("operands belong to different fields") {}
};

struct SingularMatrixError : std::domain_error {
  SingularMatrixError() : std::domain_error("matrix is not invertible") {}
};

struct EmptyTupleError : std::invalid_argument {
  EmptyTupleError() : std::invalid_argument("tuple of matrices is empty") {}
};

struct UnsupportedFieldError : std::invalid_argument {
  explicit UnsupportedFieldError(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexOutOfRangeError : std::out_of_range {
  explicit IndexOutOfRangeError(const std::string& what) : std::out_of_range(what) {}
};

// Enumeration would exceed the configured tuple budget. Carries the
// required count (as a decimal string, it can overflow 64 bits) so the
// caller can re-budget.
struct BudgetExceededError : std::runtime_error {
  std::string required;
  BudgetExceededError(std::string required_count, const std::string& budget)
      : std::runtime_error("enumeration requires " + required_count +
                           " tuples, budget is " + budget),
        required(std::move(required_count)) {}
};

// A Laurent division left a nonzero remainder. In this code base that
// always means a mistranscribed closed form, so the remainder is kept
// for the error message.
struct InexactDivisionError : std::runtime_error {
  std::string remainder;
  explicit InexactDivisionError(std::string rem)
      : std::runtime_error("inexact Laurent division, remainder " + rem),
        remainder(std::move(rem)) {}
};

}  // namespace repvar2
