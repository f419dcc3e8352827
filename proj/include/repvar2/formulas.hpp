#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repvar2/laurent.hpp"

namespace repvar2 {

enum class Space { Rep, Ch };
enum class StratumKey { Sc, Ss, U, Borel, Air, Total };
enum class PolyKind { Count, Vhp, VhpCompact };

const char* space_name(Space s);          // "rep", "ch"
const char* stratum_key_name(StratumKey); // "sc", ..., "air", "total"
const char* poly_kind_name(PolyKind);     // "count", "vhp", "vhpc"
Space space_from_name(const std::string&);
StratumKey stratum_key_from_name(const std::string&);
PolyKind poly_kind_from_name(const std::string&);

// Key into the closed-form registry. The matrix size n is 2 except for the
// Borel and scalar strata, which carry general-n formulas. Total exists
// only for Ch at n = 2 and covers the closed-orbit strata (air, ss, sc);
// its ordinary-VHP variant is not defined.
struct FormulaKey {
  Space space;
  StratumKey stratum;
  PolyKind kind;
  int n = 2;

  std::string str() const;
  bool operator==(const FormulaKey&) const = default;
};

// The closed form for the given key as a Laurent polynomial in q (counts)
// or z (virtual Hodge polynomials); m is the number of generators. Throws
// std::invalid_argument for undefined keys.
LaurentPoly formula(const FormulaKey& key, int m);

LaurentPoly count_formula(Space space, StratumKey stratum, int m, int n = 2);
LaurentPoly vhp_formula(Space space, StratumKey stratum, bool compact, int m, int n = 2);

// Every key defined at matrix size n, in a fixed presentation order.
std::vector<FormulaKey> formula_keys(int n = 2);

struct CheckResult {
  bool pass = false;
  std::string detail;
};

// VHPc(z) = z^d VHP(1/z) with d the top degree of VHPc (zero strata pass
// when both variants vanish).
CheckResult duality_check(Space space, StratumKey stratum, int m, int n = 2);
// Sum of the five compact VHPs is z^{4m}, and the rank-2 pieces combine to
// z^m (z^2 + z + 1)(z^m - 1).
CheckResult additivity_check(int m);
// q^{2m-1}(q^{2m}-1)/(q^2-1) = |Ch_u| + |Ch_B| + |Ch_air| (the count of
// absolutely indecomposable pairs matches the open-orbit strata).
CheckResult hua_check(int m);
// VHP evaluated at 1 equals the rational Euler characteristic: 1 for the
// scalar strata, m for Ch_u, 0 everywhere else.
CheckResult euler_check(Space space, StratumKey stratum, int m);
// The general-n Borel and scalar formulas specialize at n = 2 to the
// dedicated degree-2 forms.
CheckResult general_n_specialization_check(int m);

// Test hook: adds delta * x^exponent to the one registry formula matching
// (key, m), so downstream verification must detect the perturbation.
struct FormulaFault {
  FormulaKey key;
  int m = 0;
  int exponent = 0;
  BigInt delta = 1;
};
void set_formula_fault(std::optional<FormulaFault> fault);
std::optional<FormulaFault> current_formula_fault();

}  // namespace repvar2
