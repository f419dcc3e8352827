#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repvar2/formulas.hpp"
#include "repvar2/orbits.hpp"
#include "repvar2/stratify.hpp"
#include "repvar2/zeta.hpp"

namespace repvar2 {

struct GridCell {
  uint32_t q;
  int m;
  std::string str() const { return "q=" + std::to_string(q) + ",m=" + std::to_string(m); }
};

// Census + formula verification cells; orbit sweeps run on every cell whose
// q^{4m} * |PGL_2| stays within the op budget.
std::vector<GridCell> default_grid();
std::vector<GridCell> extended_grid();  // adds (7,2) and (4,3)

struct VerifyOptions {
  int workers = 0;                  // census workers, 0 = hardware concurrency
  double budget_seconds = 0;        // 0 = unlimited; cells are skipped once spent
  uint64_t tuple_budget = kDefaultTupleBudget;
  uint64_t orbit_op_budget = 5'000'000'000;
  int symbolic_max_m = 12;
};

struct Failure {
  std::string cell;      // "q=3,m=2" or "m=7" for symbolic checks
  std::string quantity;  // e.g. "census.count:rep_ss"
  std::string expected;
  std::string observed;
};

struct CellReport {
  GridCell cell;
  bool skipped = false;
  bool census_ok = false;
  bool orbits_run = false;
  bool orbits_ok = false;
  bool stabilizers_ok = false;
  StratumCensus census;
  std::optional<OrbitCensus> orbits;
};

struct VerificationReport {
  std::vector<CellReport> cells;
  bool symbolic_ok = false;
  bool zeta_ok = false;
  std::vector<Failure> failures;
  int skipped_cells = 0;
  bool overall_pass = false;  // failures empty

  nlohmann::ordered_json to_json() const;
  std::string summary() const;  // fixed-format text table
};

// Runs the whole verification matrix: per-cell census vs closed forms,
// orbit counts vs character-variety forms with stabilizer profiles, the
// symbolic identity suite and the zeta suite for m = 1..symbolic_max_m.
VerificationReport run_verification(const std::vector<GridCell>& grid,
                                    const VerifyOptions& opts = {});

}  // namespace repvar2
