#include "repvar2/laurent.hpp"

#include <nlohmann/json.hpp>

namespace repvar2 {

void LaurentPoly::set(int exp, BigInt c) {
  if (c == 0)
    coeffs_.erase(exp);
  else
    coeffs_[exp] = std::move(c);
}

LaurentPoly LaurentPoly::term(BigInt coeff, int exp, std::string var) {
  LaurentPoly p(std::move(var));
  p.set(exp, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::constant(BigInt value, std::string var) {
  return term(std::move(value), 0, std::move(var));
}

int LaurentPoly::degree() const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  return coeffs_.rbegin()->first;
}

int LaurentPoly::valuation() const {
  if (is_zero()) throw std::domain_error("valuation of zero polynomial");
  return coeffs_.begin()->first;
}

BigInt LaurentPoly::coeff(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

LaurentPoly LaurentPoly::with_var(std::string var) const {
  LaurentPoly p = *this;
  p.var_ = std::move(var);
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) + c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) - c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(var_);
  for (const auto& [ea, ca] : coeffs_)
    for (const auto& [eb, cb] : o.coeffs_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r = constant(1, var_);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    if (e >>= 1) base = base * base;
  }
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int n) const {
  if (n < 1) throw std::invalid_argument("substitution power must be >= 1");
  LaurentPoly r(var_);
  for (const auto& [e, c] : coeffs_) r.coeffs_[e * n] = c;
  return r;
}

LaurentPoly LaurentPoly::reciprocal() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly r(var_);
  for (const auto& [ee, c] : coeffs_) r.coeffs_[ee + e] = c;
  return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return LaurentPoly(var_);
  // Shift both operands to plain polynomials and long-divide from the top;
  // any coefficient that fails to divide, or a nonzero final remainder,
  // means the division is not exact.
  LaurentPoly r = shifted(-valuation());
  LaurentPoly d = divisor.shifted(-divisor.valuation());
  int result_shift = valuation() - divisor.valuation();
  LaurentPoly quot(var_);
  const BigInt& lead_d = d.coeffs_.rbegin()->second;
  int deg_d = d.degree();
  while (!r.is_zero() && r.degree() >= deg_d) {
    const BigInt& lead_r = r.coeffs_.rbegin()->second;
    if (lead_r % lead_d != 0) throw InexactDivisionError(r.shifted(result_shift).str());
    LaurentPoly t = term(lead_r / lead_d, r.degree() - deg_d, var_);
    quot = quot + t;
    r = r - t * d;
  }
  if (!r.is_zero()) throw InexactDivisionError(r.shifted(result_shift).str());
  return quot.shifted(result_shift);
}

BigInt LaurentPoly::evaluate(const BigInt& x) const {
  if (is_zero()) return 0;
  if (valuation() < 0)
    throw std::domain_error("evaluation of a Laurent polynomial with poles at 0");
  // Horner over the gaps between stored exponents, highest first.
  BigInt acc = 0;
  int prev_exp = degree();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    for (int i = it->first; i < prev_exp; ++i) acc *= x;
    acc += it->second;
    prev_exp = it->first;
  }
  for (int i = 0; i < prev_exp; ++i) acc *= x;
  return acc;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1 || e == 0) out += mag.str();
    if (e != 0) {
      out += var_;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : coeffs_) terms.push_back({e, c.str()});
  return terms;
}

}  // namespace repvar2
