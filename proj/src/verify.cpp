#include "repvar2/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <nlohmann/json.hpp>

namespace repvar2 {

namespace {

StratumKey to_key(Stratum s) {
  switch (s) {
    case Stratum::Sc: return StratumKey::Sc;
    case Stratum::Ss: return StratumKey::Ss;
    case Stratum::U: return StratumKey::U;
    case Stratum::Borel: return StratumKey::Borel;
    case Stratum::Air: return StratumKey::Air;
  }
  throw std::logic_error("bad stratum");
}

struct Checker {
  std::vector<Failure>& failures;

  void expect(bool ok, const std::string& cell, const std::string& quantity,
              const std::string& expected, const std::string& observed) {
    if (!ok) failures.push_back({cell, quantity, expected, observed});
  }

  void expect_eq(const BigInt& expected, const BigInt& observed, const std::string& cell,
                 const std::string& quantity) {
    expect(expected == observed, cell, quantity, expected.str(), observed.str());
  }

  void expect_check(const CheckResult& r, const std::string& cell,
                    const std::string& quantity) {
    expect(r.pass, cell, quantity, "pass", r.detail.empty() ? "fail" : r.detail);
  }
};

bool verify_cell_census(const GridCell& cell, const StratumCensus& sc, Checker& chk) {
  size_t before = chk.failures.size();
  BigInt q(sc.q);
  for (Stratum s : kAllStrata) {
    BigInt expected = count_formula(Space::Rep, to_key(s), sc.m).evaluate(q);
    chk.expect_eq(expected, BigInt(sc.counts.at(s)), cell.str(),
                  std::string("census.count:rep_") + stratum_name(s));
  }
  BigInt total = LaurentPoly::monomial(4 * sc.m, "q").evaluate(q);
  chk.expect_eq(total, BigInt(sc.total), cell.str(), "census.total");
  uint64_t sum = 0;
  for (Stratum s : kAllStrata) sum += sc.counts.at(s);
  chk.expect_eq(BigInt(sc.total), BigInt(sum), cell.str(), "census.sum");
  return chk.failures.size() == before;
}

bool verify_cell_orbits(const GridCell& cell, const OrbitCensus& oc, Checker& chk) {
  size_t before = chk.failures.size();
  BigInt q(oc.q);
  for (Stratum s : kAllStrata) {
    BigInt expected = count_formula(Space::Ch, to_key(s), oc.m).evaluate(q);
    chk.expect_eq(expected, BigInt(oc.orbit_counts.at(s)), cell.str(),
                  std::string("orbits.count:ch_") + stratum_name(s));
  }
  BigInt closed = BigInt(oc.orbit_counts.at(Stratum::Air)) +
                  BigInt(oc.orbit_counts.at(Stratum::Ss)) +
                  BigInt(oc.orbit_counts.at(Stratum::Sc));
  chk.expect_eq(count_formula(Space::Ch, StratumKey::Total, oc.m).evaluate(q), closed,
                cell.str(), "orbits.count:ch_total");
  return chk.failures.size() == before;
}

bool verify_cell_stabilizers(const GridCell& cell, const StratumCensus& sc,
                             const OrbitCensus& oc, Checker& chk) {
  size_t before = chk.failures.size();
  uint64_t q = oc.q;
  uint64_t pgl = q * q * q - q;
  auto profile_is = [&](Stratum s, std::vector<uint64_t> allowed, bool need_all) {
    const auto& prof = oc.stabilizer_profile.at(s);
    for (const auto& [order, n] : prof) {
      bool ok = std::find(allowed.begin(), allowed.end(), order) != allowed.end();
      chk.expect(ok && n > 0, cell.str(),
                 std::string("orbits.stabilizers:") + stratum_name(s),
                 "orders in {" + [&] {
                   std::string t;
                   for (uint64_t a : allowed) t += (t.empty() ? "" : ",") + std::to_string(a);
                   return t;
                 }() + "}",
                 "order " + std::to_string(order));
    }
    if (need_all) {
      for (uint64_t a : allowed)
        chk.expect(prof.count(a) && prof.at(a) > 0, cell.str(),
                   std::string("orbits.stabilizers:") + stratum_name(s),
                   "order " + std::to_string(a) + " occurs", "absent");
    }
  };
  profile_is(Stratum::Sc, {pgl}, false);
  profile_is(Stratum::Ss, {q - 1, q + 1}, true);
  profile_is(Stratum::U, {q}, false);
  profile_is(Stratum::Borel, {1}, false);
  profile_is(Stratum::Air, {1}, false);
  // Orbit-stabilizer bookkeeping: summed orbit sizes recover the census.
  for (Stratum s : kAllStrata) {
    uint64_t points = 0;
    for (const auto& [order, n] : oc.stabilizer_profile.at(s)) points += pgl / order * n;
    chk.expect_eq(BigInt(sc.counts.at(s)), BigInt(points), cell.str(),
                  std::string("orbits.point_sum:") + stratum_name(s));
  }
  return chk.failures.size() == before;
}

void verify_symbolic(int m, Checker& chk) {
  std::string cell = "m=" + std::to_string(m);
  chk.expect_check(additivity_check(m), cell, "identity.additivity");
  chk.expect_check(hua_check(m), cell, "identity.hua");
  chk.expect_check(general_n_specialization_check(m), cell, "identity.general_n");

  LaurentPoly rep_sum("q");
  for (StratumKey s : {StratumKey::Sc, StratumKey::Ss, StratumKey::U, StratumKey::Borel,
                       StratumKey::Air})
    rep_sum = rep_sum + count_formula(Space::Rep, s, m);
  chk.expect(rep_sum == LaurentPoly::monomial(4 * m, "q"), cell, "identity.count_sum",
             "q^" + std::to_string(4 * m), rep_sum.str());

  LaurentPoly pgl = LaurentPoly::monomial(3, "q") - LaurentPoly::monomial(1, "q");
  chk.expect(count_formula(Space::Rep, StratumKey::Air, m) ==
                 count_formula(Space::Ch, StratumKey::Air, m) * pgl,
             cell, "identity.air_free_action", "count(rep_air) = count(ch_air)*(q^3-q)",
             "mismatch");

  LaurentPoly closed = count_formula(Space::Ch, StratumKey::Air, m) +
                       count_formula(Space::Ch, StratumKey::Ss, m) +
                       count_formula(Space::Ch, StratumKey::Sc, m);
  chk.expect(count_formula(Space::Ch, StratumKey::Total, m) == closed, cell,
             "identity.ch_total", "count(ch_total) = air + ss + sc", "mismatch");

  for (Space sp : {Space::Rep, Space::Ch}) {
    for (StratumKey st : {StratumKey::Sc, StratumKey::Ss, StratumKey::U, StratumKey::Borel,
                          StratumKey::Air}) {
      std::string name = std::string(space_name(sp)) + "_" + stratum_key_name(st);
      chk.expect_check(duality_check(sp, st, m), cell, "identity.duality:" + name);
      chk.expect_check(euler_check(sp, st, m), cell, "identity.euler:" + name);
      chk.expect(count_formula(sp, st, m) == vhp_formula(sp, st, true, m), cell,
                 "identity.zq_coincidence:" + name, "count = VHPc(q)", "mismatch");
    }
  }
  chk.expect(count_formula(Space::Ch, StratumKey::Total, m) ==
                 vhp_formula(Space::Ch, StratumKey::Total, true, m),
             cell, "identity.zq_coincidence:ch_total", "count = VHPc(q)", "mismatch");
}

void verify_zeta(int m, Checker& chk) {
  std::string cell = "m=" + std::to_string(m);
  for (ZetaSpace space : {ZetaSpace::RepAir, ZetaSpace::ChAir, ZetaSpace::ChTotal}) {
    CheckResult counts = zeta_count_check(space, m);
    chk.expect_check(counts, cell,
                     std::string("zeta.counts:") + zeta_space_name(space));
    ZetaFactorization norm = zeta_factorization(space, m).normalized();
    bool disjoint = true;
    for (int a : norm.num)
      disjoint = disjoint && std::find(norm.den.begin(), norm.den.end(), a) == norm.den.end();
    chk.expect(disjoint, cell, std::string("zeta.normalized:") + zeta_space_name(space),
               "disjoint exponents", norm.str());
  }

  for (ZetaSpace space : {ZetaSpace::RepAir, ZetaSpace::ChAir}) {
    PairingResult fe = functional_equation_check(space, m);
    chk.expect(fe.pass, cell,
               std::string("zeta.functional_equation:") + zeta_space_name(space),
               "shift " + std::to_string(fe.shift), fe.detail);
    // Negative control: the off-by-one shifts must fail. ChAir at m = 1 is
    // an empty product, vacuously symmetric for every shift, so skip it.
    if (space == ZetaSpace::ChAir && m == 1) continue;
    ZetaFactorization zf = zeta_factorization(space, m);
    for (int delta : {-1, 1}) {
      PairingResult bad = exponent_pairing(zf, fe.shift + delta, fe.exchange);
      chk.expect(!bad.pass, cell,
                 std::string("zeta.negative_control:") + zeta_space_name(space),
                 "shift " + std::to_string(fe.shift + delta) + " fails", "passed");
    }
  }

  // ch_total differs from ch_air by exactly the denominator exponent 2m.
  ZetaFactorization air = zeta_factorization(ZetaSpace::ChAir, m);
  ZetaFactorization total = zeta_factorization(ZetaSpace::ChTotal, m);
  std::vector<int> extra = air.den;
  extra.push_back(2 * m);
  std::sort(extra.begin(), extra.end());
  chk.expect(total.num == air.num && total.den == extra, cell, "zeta.ch_total_shape",
             "ch_air plus denominator exponent " + std::to_string(2 * m), total.str());
}

}  // namespace

std::vector<GridCell> default_grid() {
  return {{2, 1}, {3, 1}, {4, 1}, {5, 1}, {7, 1}, {9, 1}, {2, 2}, {3, 2}, {4, 2},
          {5, 2}, {2, 3}, {3, 3}, {2, 4}};
}

std::vector<GridCell> extended_grid() {
  auto grid = default_grid();
  grid.push_back({7, 2});
  grid.push_back({4, 3});
  return grid;
}

VerificationReport run_verification(const std::vector<GridCell>& grid,
                                    const VerifyOptions& opts) {
  VerificationReport report;
  Checker chk{report.failures};
  auto t0 = std::chrono::steady_clock::now();
  auto out_of_budget = [&] {
    if (opts.budget_seconds <= 0) return false;
    double spent = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return spent >= opts.budget_seconds;
  };

  for (const GridCell& cell : grid) {
    CellReport cr;
    cr.cell = cell;
    if (out_of_budget()) {
      cr.skipped = true;
      report.skipped_cells++;
      report.cells.push_back(std::move(cr));
      continue;
    }
    CensusOptions copts;
    copts.workers = opts.workers;
    copts.tuple_budget = opts.tuple_budget;
    cr.census = census(cell.q, cell.m, copts);
    cr.census_ok = verify_cell_census(cell, cr.census, chk);

    BigInt ops = 1;
    for (int i = 0; i < 4 * cell.m; ++i) ops *= cell.q;
    ops *= BigInt(cell.q) * cell.q * cell.q - cell.q;
    if (ops <= BigInt(opts.orbit_op_budget) && !out_of_budget()) {
      OrbitOptions oopts;
      oopts.tuple_budget = opts.tuple_budget;
      oopts.op_budget = opts.orbit_op_budget;
      cr.orbits = orbit_census(cell.q, cell.m, oopts);
      cr.orbits_run = true;
      cr.orbits_ok = verify_cell_orbits(cell, *cr.orbits, chk);
      cr.stabilizers_ok = verify_cell_stabilizers(cell, cr.census, *cr.orbits, chk);
    }
    report.cells.push_back(std::move(cr));
  }

  size_t before = report.failures.size();
  for (int m = 1; m <= opts.symbolic_max_m; ++m) verify_symbolic(m, chk);
  report.symbolic_ok = report.failures.size() == before;

  before = report.failures.size();
  for (int m = 1; m <= opts.symbolic_max_m; ++m) verify_zeta(m, chk);
  report.zeta_ok = report.failures.size() == before;

  report.overall_pass = report.failures.empty();
  return report;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json cells_json = nlohmann::ordered_json::array();
  for (const CellReport& cr : cells) {
    nlohmann::ordered_json c{{"q", cr.cell.q}, {"m", cr.cell.m}};
    if (cr.skipped) {
      c["skipped"] = true;
    } else {
      c["census"] = cr.census.to_json();
      c["census_ok"] = cr.census_ok;
      if (cr.orbits_run) {
        c["orbits"] = cr.orbits->to_json();
        c["orbits_ok"] = cr.orbits_ok;
        c["stabilizers_ok"] = cr.stabilizers_ok;
      }
    }
    cells_json.push_back(std::move(c));
  }
  nlohmann::ordered_json failures_json = nlohmann::ordered_json::array();
  for (const Failure& f : failures)
    failures_json.push_back(nlohmann::ordered_json{{"cell", f.cell},
                                                   {"quantity", f.quantity},
                                                   {"expected", f.expected},
                                                   {"observed", f.observed}});
  return nlohmann::ordered_json{{"cells", cells_json},
                                {"symbolic_ok", symbolic_ok},
                                {"zeta_ok", zeta_ok},
                                {"skipped_cells", skipped_cells},
                                {"failures", failures_json},
                                {"overall", overall_pass ? "pass" : "fail"}};
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  for (const CellReport& cr : cells) {
    out << cr.cell.str();
    if (cr.skipped) {
      out << "  skipped (budget)\n";
      continue;
    }
    out << "  census " << (cr.census_ok ? "ok" : "MISMATCH");
    if (cr.orbits_run) {
      out << "  orbits " << (cr.orbits_ok ? "ok" : "MISMATCH") << "  stabilizers "
          << (cr.stabilizers_ok ? "ok" : "MISMATCH");
    } else {
      out << "  orbits -";
    }
    out << "  (" << cr.census.elapsed_ms << " ms";
    if (cr.orbits_run) out << " + " << cr.orbits->elapsed_ms << " ms";
    out << ")\n";
  }
  out << "symbolic identities: " << (symbolic_ok ? "ok" : "MISMATCH") << "\n";
  out << "zeta checks: " << (zeta_ok ? "ok" : "MISMATCH") << "\n";
  for (const Failure& f : failures)
    out << "FAIL " << f.cell << " " << f.quantity << ": expected " << f.expected
        << ", observed " << f.observed << "\n";
  out << "overall: " << (overall_pass ? "PASS" : "FAIL") << " (" << failures.size()
      << " failures";
  if (skipped_cells) out << ", " << skipped_cells << " cells skipped";
  out << ")\n";
  return out.str();
}

}  // namespace repvar2
