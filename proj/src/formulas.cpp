#include "repvar2/formulas.hpp"

#include <array>

namespace repvar2 {

namespace {

using LP = LaurentPoly;

LP one() { return LP::constant(1); }
LP mono(int e) { return LP::monomial(e); }
LP pm1(int e) { return mono(e) - one(); }  // z^e - 1
LP omp(int e) { return one() - mono(e); }  // 1 - z^e

// ---- counts over F_q / compact-support virtual Hodge polynomials --------
// The two families share one shape per stratum; only the variable label
// differs ("the number coincides with the VHP evaluated at q").

LP c_sc(int m, int) { return mono(m); }
LP c_rep_ss(int m, int) { return mono(m + 2) * pm1(m); }
LP c_ch_ss(int m, int) { return mono(m) * pm1(m); }
LP c_rep_u(int m, int) { return mono(m) * pm1(m) * (mono(1) + one()); }
LP c_ch_u(int m, int) { return (mono(m) * pm1(m)).exact_div(pm1(1)); }
LP c_rep_borel(int m, int) { return (mono(m) - mono(1)) * mono(m) * pm1(m) * (mono(1) + one()); }
LP c_ch_borel(int m, int) { return (mono(m) * pm1(m) * pm1(m - 1)).exact_div(pm1(1)); }
LP c_rep_air(int m, int) { return mono(2 * m + 1) * pm1(m) * pm1(m - 1); }
LP c_ch_air(int m, int) { return (mono(2 * m) * pm1(m) * pm1(m - 1)).exact_div(pm1(2)); }
// Builds through negative exponents for m < 3 and collapses after the
// exact division.
LP c_ch_total(int m, int) {
  LP inner = mono(2 * m - 3) - mono(m - 2) - mono(m - 3) + one();
  return (mono(2 * m + 2) * inner).exact_div(pm1(2));
}

// General-n Borel and scalar forms (specialized to n = 2 by a consistency
// check against the dedicated forms above).
LP c_sc_general(int m, int) { return mono(m); }
LP c_rep_borel_general(int m, int n) {
  LP num = mono(m * (n - 1) * (n - 2) / 2) * (mono(m) - mono(1)).pow(n - 1);
  for (int k = 0; k < n; ++k) num = num * (mono(m) - LP::constant(k));
  for (int k = 1; k <= n; ++k) num = num * pm1(k);
  return num.exact_div(pm1(1).pow(n));
}
LP c_ch_borel_general(int m, int n) {
  LP num = mono((m - 1) * (n - 1) * (n - 2) / 2) * pm1(m - 1).pow(n - 1);
  for (int k = 0; k < n; ++k) num = num * (mono(m) - LP::constant(k));
  return num.exact_div(pm1(1).pow(n - 1));
}

// ---- ordinary virtual Hodge polynomials ---------------------------------

LP v_sc(int, int) { return one(); }
LP v_rep_ss(int m, int) { return omp(m); }
LP v_ch_ss(int m, int) { return omp(m); }
LP v_rep_u(int m, int) { return (one() + mono(1)) * omp(m); }
LP v_ch_u(int m, int) { return omp(m).exact_div(omp(1)); }
LP v_rep_borel(int m, int) { return omp(m - 1) * omp(m) * (one() + mono(1)); }
LP v_ch_borel(int m, int) { return (omp(m - 1) * omp(m)).exact_div(omp(1)); }
LP v_rep_air(int m, int) { return omp(m) * omp(m - 1); }
LP v_ch_air(int m, int) { return (omp(m) * omp(m - 1)).exact_div(omp(2)); }

LP v_sc_general(int, int) { return one(); }
LP v_rep_borel_general(int m, int n) {
  LP num = omp(m - 1).pow(n - 1);
  for (int k = 1; k < n; ++k) num = num * (one() - LP::term(k, m));
  for (int i = 1; i <= n; ++i) num = num * omp(i);
  return num.exact_div(omp(1).pow(n));
}
LP v_ch_borel_general(int m, int n) {
  LP num = omp(m - 1).pow(n - 1);
  for (int k = 1; k < n; ++k) num = num * (one() - LP::term(k, m));
  return num.exact_div(omp(1).pow(n - 1));
}

struct Entry {
  Space space;
  StratumKey stratum;
  PolyKind kind;
  LP (*make)(int m, int n);       // dedicated n = 2 form
  LP (*make_general)(int m, int n) = nullptr;  // general-n form, if any
};

// The whole paper-to-code transcription lives in this table.
constexpr Entry kRegistry[] = {
    {Space::Rep, StratumKey::Sc, PolyKind::Count, c_sc, c_sc_general},
    {Space::Rep, StratumKey::Ss, PolyKind::Count, c_rep_ss},
    {Space::Rep, StratumKey::U, PolyKind::Count, c_rep_u},
    {Space::Rep, StratumKey::Borel, PolyKind::Count, c_rep_borel, c_rep_borel_general},
    {Space::Rep, StratumKey::Air, PolyKind::Count, c_rep_air},
    {Space::Ch, StratumKey::Sc, PolyKind::Count, c_sc, c_sc_general},
    {Space::Ch, StratumKey::Ss, PolyKind::Count, c_ch_ss},
    {Space::Ch, StratumKey::U, PolyKind::Count, c_ch_u},
    {Space::Ch, StratumKey::Borel, PolyKind::Count, c_ch_borel, c_ch_borel_general},
    {Space::Ch, StratumKey::Air, PolyKind::Count, c_ch_air},
    {Space::Ch, StratumKey::Total, PolyKind::Count, c_ch_total},
    {Space::Rep, StratumKey::Sc, PolyKind::VhpCompact, c_sc, c_sc_general},
    {Space::Rep, StratumKey::Ss, PolyKind::VhpCompact, c_rep_ss},
    {Space::Rep, StratumKey::U, PolyKind::VhpCompact, c_rep_u},
    {Space::Rep, StratumKey::Borel, PolyKind::VhpCompact, c_rep_borel, c_rep_borel_general},
    {Space::Rep, StratumKey::Air, PolyKind::VhpCompact, c_rep_air},
    {Space::Ch, StratumKey::Sc, PolyKind::VhpCompact, c_sc, c_sc_general},
    {Space::Ch, StratumKey::Ss, PolyKind::VhpCompact, c_ch_ss},
    {Space::Ch, StratumKey::U, PolyKind::VhpCompact, c_ch_u},
    {Space::Ch, StratumKey::Borel, PolyKind::VhpCompact, c_ch_borel, c_ch_borel_general},
    {Space::Ch, StratumKey::Air, PolyKind::VhpCompact, c_ch_air},
    {Space::Ch, StratumKey::Total, PolyKind::VhpCompact, c_ch_total},
    {Space::Rep, StratumKey::Sc, PolyKind::Vhp, v_sc, v_sc_general},
    {Space::Rep, StratumKey::Ss, PolyKind::Vhp, v_rep_ss},
    {Space::Rep, StratumKey::U, PolyKind::Vhp, v_rep_u},
    {Space::Rep, StratumKey::Borel, PolyKind::Vhp, v_rep_borel, v_rep_borel_general},
    {Space::Rep, StratumKey::Air, PolyKind::Vhp, v_rep_air},
    {Space::Ch, StratumKey::Sc, PolyKind::Vhp, v_sc, v_sc_general},
    {Space::Ch, StratumKey::Ss, PolyKind::Vhp, v_ch_ss},
    {Space::Ch, StratumKey::U, PolyKind::Vhp, v_ch_u},
    {Space::Ch, StratumKey::Borel, PolyKind::Vhp, v_ch_borel, v_ch_borel_general},
    {Space::Ch, StratumKey::Air, PolyKind::Vhp, v_ch_air},
};

const Entry* find_entry(const FormulaKey& key) {
  for (const Entry& e : kRegistry)
    if (e.space == key.space && e.stratum == key.stratum && e.kind == key.kind) return &e;
  return nullptr;
}

std::optional<FormulaFault> g_fault;

}  // namespace

const char* space_name(Space s) { return s == Space::Rep ? "rep" : "ch"; }

const char* stratum_key_name(StratumKey s) {
  switch (s) {
    case StratumKey::Sc: return "sc";
    case StratumKey::Ss: return "ss";
    case StratumKey::U: return "u";
    case StratumKey::Borel: return "borel";
    case StratumKey::Air: return "air";
    case StratumKey::Total: return "total";
  }
  return "?";
}

const char* poly_kind_name(PolyKind k) {
  switch (k) {
    case PolyKind::Count: return "count";
    case PolyKind::Vhp: return "vhp";
    case PolyKind::VhpCompact: return "vhpc";
  }
  return "?";
}

Space space_from_name(const std::string& s) {
  if (s == "rep") return Space::Rep;
  if (s == "ch") return Space::Ch;
  throw std::invalid_argument("unknown space: " + s);
}

StratumKey stratum_key_from_name(const std::string& s) {
  for (StratumKey k : {StratumKey::Sc, StratumKey::Ss, StratumKey::U, StratumKey::Borel,
                       StratumKey::Air, StratumKey::Total})
    if (s == stratum_key_name(k)) return k;
  throw std::invalid_argument("unknown stratum key: " + s);
}

PolyKind poly_kind_from_name(const std::string& s) {
  for (PolyKind k : {PolyKind::Count, PolyKind::Vhp, PolyKind::VhpCompact})
    if (s == poly_kind_name(k)) return k;
  throw std::invalid_argument("unknown polynomial kind: " + s);
}

std::string FormulaKey::str() const {
  std::string out = std::string(poly_kind_name(kind)) + ":" + space_name(space) + "_" +
                    stratum_key_name(stratum);
  if (n != 2) out += ":n=" + std::to_string(n);
  return out;
}

LaurentPoly formula(const FormulaKey& key, int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (key.n < 2) throw std::invalid_argument("matrix size n must be >= 2");
  const Entry* e = find_entry(key);
  if (!e) throw std::invalid_argument("undefined formula key " + key.str());
  LP p;
  if (key.n == 2) {
    p = e->make(m, 2);
  } else {
    if (!e->make_general)
      throw std::invalid_argument("formula " + key.str() + " is defined only for n = 2");
    p = e->make_general(m, key.n);
  }
  if (g_fault && g_fault->key == key && g_fault->m == m)
    p = p + LP::term(g_fault->delta, g_fault->exponent);
  return p.with_var(key.kind == PolyKind::Count ? "q" : "z");
}

LaurentPoly count_formula(Space space, StratumKey stratum, int m, int n) {
  return formula(FormulaKey{space, stratum, PolyKind::Count, n}, m);
}

LaurentPoly vhp_formula(Space space, StratumKey stratum, bool compact, int m, int n) {
  return formula(FormulaKey{space, stratum, compact ? PolyKind::VhpCompact : PolyKind::Vhp, n},
                 m);
}

std::vector<FormulaKey> formula_keys(int n) {
  std::vector<FormulaKey> keys;
  for (const Entry& e : kRegistry) {
    if (n != 2 && !e.make_general) continue;
    keys.push_back(FormulaKey{e.space, e.stratum, e.kind, n});
  }
  return keys;
}

CheckResult duality_check(Space space, StratumKey stratum, int m, int n) {
  LP vc = vhp_formula(space, stratum, true, m, n);
  LP v = vhp_formula(space, stratum, false, m, n);
  if (vc.is_zero() || v.is_zero()) {
    bool pass = vc.is_zero() && v.is_zero();
    return {pass, pass ? "both variants vanish" : "only one variant vanishes"};
  }
  int d = vc.degree();
  LP dual = v.reciprocal().shifted(d);
  if (vc == dual) return {true, "d=" + std::to_string(d)};
  return {false, "z^" + std::to_string(d) + "*VHP(1/z) = " + dual.str() +
                     " but VHPc = " + vc.str()};
}

CheckResult additivity_check(int m) {
  LP sum;
  for (StratumKey s :
       {StratumKey::Sc, StratumKey::Ss, StratumKey::U, StratumKey::Borel, StratumKey::Air})
    sum = sum + vhp_formula(Space::Rep, s, true, m);
  if (sum != mono(4 * m))
    return {false, "stratum VHPc sum is " + sum.str() + ", expected z^" +
                       std::to_string(4 * m)};
  LP rk2 = vhp_formula(Space::Rep, StratumKey::Ss, true, m) +
           vhp_formula(Space::Rep, StratumKey::U, true, m);
  LP expect = mono(m) * (mono(2) + mono(1) + one()) * pm1(m);
  if (rk2 != expect)
    return {false, "rank-2 sum is " + rk2.str() + ", expected " + expect.str()};
  return {true, ""};
}

CheckResult hua_check(int m) {
  LP lhs = (mono(2 * m - 1) * pm1(2 * m)).exact_div(pm1(2));
  LP rhs = count_formula(Space::Ch, StratumKey::U, m) +
           count_formula(Space::Ch, StratumKey::Borel, m) +
           count_formula(Space::Ch, StratumKey::Air, m);
  if (lhs == rhs) return {true, ""};
  return {false, "indecomposable count " + lhs.str() + " != stratum sum " + rhs.str()};
}

CheckResult euler_check(Space space, StratumKey stratum, int m) {
  LP v = vhp_formula(space, stratum, false, m);
  BigInt expected = 0;
  if (stratum == StratumKey::Sc) expected = 1;
  if (space == Space::Ch && stratum == StratumKey::U) expected = m;
  BigInt got = v.evaluate(1);
  if (got == expected) return {true, ""};
  return {false, "VHP(1) = " + got.str() + ", expected " + expected.str()};
}

CheckResult general_n_specialization_check(int m) {
  for (const Entry& e : kRegistry) {
    if (!e.make_general) continue;
    FormulaKey key{e.space, e.stratum, e.kind, 2};
    if (e.make_general(m, 2) != formula(key, m))
      return {false, key.str() + " general-n form disagrees at n=2, m=" +
                         std::to_string(m)};
  }
  return {true, ""};
}

void set_formula_fault(std::optional<FormulaFault> fault) { g_fault = std::move(fault); }

std::optional<FormulaFault> current_formula_fault() { return g_fault; }

}  // namespace repvar2
