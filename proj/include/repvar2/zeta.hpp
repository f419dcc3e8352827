#pragma once

#include <string>
#include <utility>
#include <vector>

#include "repvar2/formulas.hpp"

namespace repvar2 {

enum class ZetaSpace { RepAir, ChAir, ChTotal };

const char* zeta_space_name(ZetaSpace);  // "rep_air", "ch_air", "ch_total"
ZetaSpace zeta_space_from_name(const std::string&);

// Weil zeta function in the rational form
//   Z(q, t) = prod_{a in num} (1 - q^a t) / prod_{a in den} (1 - q^a t),
// held as the two exponent multisets (sorted ascending).
struct ZetaFactorization {
  std::vector<int> num, den;

  // Cancels exponents shared between numerator and denominator.
  ZetaFactorization normalized() const;
  // "(1-q^7t)(1-q^6t) / (1-q^8t)(1-q^5t)"; an empty product renders "1".
  std::string str() const;
};

// Exponent multisets exactly as printed in the closed forms:
//   rep_air : num {3m+1, 3m},            den {4m, 2m+1}
//   ch_air  : num {2m+2i-2 : i <= m/2},  den {4m-2i-1 : i <= m/2}
//   ch_total: ch_air with 2m appended to the denominator
ZetaFactorization zeta_factorization(ZetaSpace space, int m);

// Point counts determine the zeta function: |X(F_{q^n})| must equal
// sum_{a in den} q^{an} - sum_{a in num} q^{an}. Checked symbolically for
// n = 1 (which forces all n) and numerically at q in {2, 3}, n = 1..5.
CheckResult zeta_count_check(ZetaSpace space, int m);

// Exponent combinatorics behind the completed-zeta functional equations.
struct PairingResult {
  bool pass = false;
  int shift = 0;
  bool exchange = false;  // false: a -> shift-a fixes num and den; true: it swaps them
  std::vector<std::pair<int, int>> pairing;
  std::string detail;
};

// a -> shift - a on the exponent multisets, either fixing both sides or
// exchanging them. Returns the full pairing as evidence.
PairingResult exponent_pairing(const ZetaFactorization& zf, int shift, bool exchange);

// rep_air: internal symmetry under a -> (6m+1) - a.
// ch_air:  numerator/denominator exchange under a -> (6m-3) - a.
// ch_total has no stated functional equation; throws std::invalid_argument.
PairingResult functional_equation_check(ZetaSpace space, int m);

}  // namespace repvar2
