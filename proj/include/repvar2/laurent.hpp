#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "repvar2/bigint.hpp"
#include "repvar2/errors.hpp"

#include <nlohmann/json_fwd.hpp>

namespace repvar2 {

// Laurent polynomial in one variable with arbitrary-precision integer
// coefficients. Canonical form: no zero coefficients stored. The variable
// label ("z" or "q") is metadata only and is ignored by comparisons; it
// survives arithmetic through the left operand.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero
  explicit LaurentPoly(std::string var) : var_(std::move(var)) {}

  static LaurentPoly term(BigInt coeff, int exp, std::string var = "z");
  static LaurentPoly constant(BigInt value, std::string var = "z");
  // x^e with coefficient 1.
  static LaurentPoly monomial(int exp, std::string var = "z") {
    return term(1, exp, std::move(var));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;     // throws std::domain_error on zero
  int valuation() const;  // throws std::domain_error on zero
  const std::map<int, BigInt>& terms() const { return coeffs_; }
  BigInt coeff(int exp) const;

  const std::string& var() const { return var_; }
  LaurentPoly with_var(std::string var) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly pow(unsigned e) const;

  LaurentPoly substitute_power(int n) const;  // x -> x^n, n >= 1
  LaurentPoly reciprocal() const;             // x -> 1/x
  LaurentPoly shifted(int e) const;           // multiply by x^e

  // Exact Laurent division; throws InexactDivisionError when the divisor
  // does not divide (carrying the nonzero remainder).
  LaurentPoly exact_div(const LaurentPoly& divisor) const;

  // Evaluation at an integer. Requires valuation >= 0.
  BigInt evaluate(const BigInt& x) const;

  // Canonical text, terms in descending exponent, coefficient 1 omitted,
  // e.g. "z^8 - z^7 - z^6 + z^5"; the zero polynomial renders "0".
  std::string str() const;
  // Sorted [[exponent, coefficient], ...] with decimal-string coefficients.
  nlohmann::json to_json() const;

  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

 private:
  void set(int exp, BigInt c);

  std::map<int, BigInt> coeffs_;
  std::string var_ = "z";
};

}  // namespace repvar2
