#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "repvar2/verify.hpp"

using namespace repvar2;

namespace {

bool failures_mention(const VerificationReport& report, const std::string& token) {
  for (const Failure& f : report.failures)
    if (f.quantity.find(token) != std::string::npos) return true;
  return false;
}

bool failures_mention_cell(const VerificationReport& report, const std::string& token,
                           const std::string& cell) {
  for (const Failure& f : report.failures)
    if (f.quantity.find(token) != std::string::npos &&
        f.cell.find(cell) != std::string::npos)
      return true;
  return false;
}

}  // namespace

TEST_CASE("small grid verifies cleanly") {
  std::vector<GridCell> grid{{2, 1}, {2, 2}, {3, 1}};
  auto report = run_verification(grid);
  CHECK(report.overall_pass);
  CHECK(report.failures.empty());
  CHECK(report.symbolic_ok);
  CHECK(report.zeta_ok);
  CHECK(report.skipped_cells == 0);
  for (const auto& cell : report.cells) {
    CHECK(cell.census_ok);
    CHECK(cell.orbits_run);
    CHECK(cell.orbits_ok);
    CHECK(cell.stabilizers_ok);
  }
  auto j = report.to_json();
  CHECK(j["overall"] == "pass");
  CHECK(j["cells"].size() == 3);
}

TEST_CASE("grids have the documented cells") {
  auto grid = default_grid();
  REQUIRE(grid.size() == 13);
  CHECK(grid.front().str() == "q=2,m=1");
  CHECK(grid.back().str() == "q=2,m=4");
  auto ext = extended_grid();
  REQUIRE(ext.size() == 15);
  CHECK(ext[13].str() == "q=7,m=2");
  CHECK(ext[14].str() == "q=4,m=3");
}

TEST_CASE("injected formula faults are detected and named") {
  std::vector<GridCell> grid{{2, 2}, {3, 2}};
  struct Case {
    FormulaFault fault;
    std::string quantity;
    std::string cell;
  };
  std::vector<Case> cases{
      {{{Space::Rep, StratumKey::Air, PolyKind::Count}, 2, 5, 1},
       "census.count:rep_air", "q=2,m=2"},
      {{{Space::Ch, StratumKey::U, PolyKind::Count}, 2, 1, -1},
       "orbits.count:ch_u", "q=3,m=2"},
      {{{Space::Rep, StratumKey::Ss, PolyKind::VhpCompact}, 3, 4, 1},
       "identity.additivity", "m=3"},
      {{{Space::Ch, StratumKey::Total, PolyKind::Count}, 2, 3, 2},
       "identity.ch_total", "m=2"},
      {{{Space::Rep, StratumKey::Borel, PolyKind::Count}, 2, 2, 1},
       "census.count:rep_borel", "q=2,m=2"},
      {{{Space::Ch, StratumKey::Air, PolyKind::VhpCompact}, 4, 6, -2},
       "identity.zq_coincidence:ch_air", "m=4"},
      {{{Space::Rep, StratumKey::Air, PolyKind::Count}, 7, 9, 1},
       "zeta.counts:rep_air", "m=7"},
  };
  for (const Case& c : cases) {
    CAPTURE(c.quantity);
    set_formula_fault(c.fault);
    auto report = run_verification(grid);
    set_formula_fault(std::nullopt);
    CHECK(!report.overall_pass);
    CHECK(!report.failures.empty());
    CHECK(failures_mention(report, c.quantity));
    CHECK(failures_mention_cell(report, c.quantity, c.cell));
  }
  // And the registry is clean again.
  CHECK(run_verification({{2, 1}}).overall_pass);
}

TEST_CASE("time budget skips cells instead of failing them") {
  VerifyOptions opts;
  opts.budget_seconds = 1e-9;
  auto report = run_verification(default_grid(), opts);
  CHECK(report.skipped_cells == 13);
  // the symbolic and zeta suites still run
  CHECK(report.symbolic_ok);
  CHECK(report.zeta_ok);
  CHECK(report.overall_pass);  // skipped cells are reported, not failed
  CHECK(report.summary().find("skipped") != std::string::npos);
}

TEST_CASE("report text names failures") {
  set_formula_fault(FormulaFault{{Space::Rep, StratumKey::Air, PolyKind::Count}, 2, 5, 1});
  auto report = run_verification({{2, 2}});
  set_formula_fault(std::nullopt);
  std::string text = report.summary();
  CHECK(text.find("FAIL q=2,m=2 census.count:rep_air") != std::string::npos);
  CHECK(text.find("overall: FAIL") != std::string::npos);
  auto j = report.to_json();
  CHECK(j["overall"] == "fail");
  CHECK(j["failures"].size() > 0);
}
