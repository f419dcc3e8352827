#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repvar2/errors.hpp"

namespace repvar2 {

class FieldSpec;

// Element of F_{p^k}. Identified by its index in the canonical enumeration:
// the coordinate vector in the power basis of the modulus, read as a base-p
// integer with the constant coordinate least significant. Index 0 is zero,
// index 1 is one.
class FieldElement {
 public:
  FieldElement() : spec_(nullptr), idx_(0) {}
  FieldElement(const FieldSpec& spec, uint32_t idx) : spec_(&spec), idx_(idx) {}

  uint32_t index() const { return idx_; }
  const FieldSpec& spec() const { return *spec_; }
  std::vector<int> coeffs() const;
  bool is_zero() const { return idx_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(uint64_t e) const;
  FieldElement frobenius() const;  // a -> a^p

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // Rendering in the power basis, e.g. "0", "1", "x", "2x+1".
  std::string str() const;

 private:
  const FieldSpec* spec_;
  uint32_t idx_;
};

// Defining data of F_{p^k} for a small prime power q = p^k <= 2^16, with the
// lexicographically smallest monic irreducible modulus of degree k over F_p
// (coefficient lists compared low degree first). The choice of irreducible
// does not matter for any of the counts, but a deterministic one keeps every
// enumeration stable across runs.
//
// Immutable after construction; all operations are pure, so one spec can be
// shared read-only between worker threads.
class FieldSpec {
 public:
  FieldSpec(int p, int k);

  // Builds the field of order q, factoring q as p^k. Throws NotPrimeError
  // if q is not a prime power.
  static FieldSpec of_order(uint32_t q);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  uint32_t order() const { return q_; }
  // Modulus coefficients, constant term first, length k+1, monic. For k = 1
  // this is the placeholder x (residue arithmetic mod p).
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement(*this, 0); }
  FieldElement one() const { return FieldElement(*this, 1); }
  FieldElement element(uint32_t idx) const;
  FieldElement from_coeffs(const std::vector<int>& coeffs) const;

  // All q elements in canonical index order. The order defines the global
  // element index used by tuple encoding.
  std::vector<FieldElement> elements() const;

  // Index-level arithmetic. Table-driven for q <= 256, polynomial
  // arithmetic above that.
  uint32_t add_idx(uint32_t a, uint32_t b) const;
  uint32_t sub_idx(uint32_t a, uint32_t b) const;
  uint32_t mul_idx(uint32_t a, uint32_t b) const;
  uint32_t neg_idx(uint32_t a) const;
  uint32_t inv_idx(uint32_t a) const;  // throws DivisionByZeroError on 0
  uint32_t pow_idx(uint32_t a, uint64_t e) const;
  uint32_t frobenius_idx(uint32_t a) const;

  std::vector<int> coeffs_of(uint32_t idx) const;
  uint32_t index_of(const std::vector<int>& coeffs) const;

  bool same_field(const FieldSpec& o) const;

  // Raw lookup tables for the enumeration hot paths; null when q > 256.
  // Binary tables are indexed a*q + b.
  bool has_tables() const { return !mul_table_.empty(); }
  const uint16_t* add_table() const { return add_table_.data(); }
  const uint16_t* sub_table() const { return sub_table_.data(); }
  const uint16_t* mul_table() const { return mul_table_.data(); }
  const uint16_t* neg_table() const { return neg_table_.data(); }
  const uint16_t* inv_table() const { return inv_table_.data(); }

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

 private:
  void build_tables();
  uint32_t mul_slow(uint32_t a, uint32_t b) const;

  int p_;
  int k_;
  uint32_t q_;
  std::vector<int> modulus_;
  std::vector<uint16_t> add_table_, sub_table_, mul_table_, neg_table_, inv_table_;
};

bool is_prime(long long n);

// Smallest monic irreducible of degree k over F_p, coefficients constant
// term first (length k+1). Irreducibility is checked by trial division
// against every monic polynomial of degree <= k/2.
std::vector<int> smallest_irreducible(int p, int k);

}  // namespace repvar2
