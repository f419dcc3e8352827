// Command-line front end: censuses, orbit counts, stratum classification,
// closed-form evaluation, zeta checks and the full verification matrix.
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid arguments,
// 3 budget exceeded.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "repvar2/verify.hpp"

using namespace repvar2;

namespace {

uint64_t env_tuple_budget() {
  if (const char* env = std::getenv("MODULI_COUNT_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("MODULI_COUNT_BUDGET", "not a valid tuple budget");
    }
  }
  return kDefaultTupleBudget;
}

std::vector<uint32_t> parse_csv_indices(const std::string& text) {
  std::vector<uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    unsigned long v = std::stoul(item, &pos);
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw std::invalid_argument("bad tuple entry: " + item);
    out.push_back(static_cast<uint32_t>(v));
  }
  return out;
}

FormulaFault parse_fault(const std::string& text) {
  // space:stratum:kind:m:exponent:delta, e.g. "rep:air:count:2:5:1"
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 6)
    throw std::invalid_argument("fault spec must be space:stratum:kind:m:exp:delta");
  FormulaFault fault;
  fault.key = FormulaKey{space_from_name(parts[0]), stratum_key_from_name(parts[1]),
                         poly_kind_from_name(parts[2])};
  fault.m = std::stoi(parts[3]);
  fault.exponent = std::stoi(parts[4]);
  fault.delta = BigInt(parts[5]);
  return fault;
}

void print_census_table(const StratumCensus& sc) {
  std::cout << "q=" << sc.q << " m=" << sc.m << " total=" << sc.total << "\n";
  for (Stratum s : kAllStrata)
    std::cout << "  " << std::left << std::setw(6) << stratum_name(s) << std::right
              << std::setw(12) << sc.counts.at(s) << "\n";
  std::cout << "elapsed_ms=" << sc.elapsed_ms << "\n";
}

void print_orbits_table(const OrbitCensus& oc) {
  std::cout << "q=" << oc.q << " m=" << oc.m << "\n";
  for (Stratum s : kAllStrata) {
    std::cout << "  " << std::left << std::setw(6) << stratum_name(s) << std::right
              << std::setw(10) << oc.orbit_counts.at(s) << "  stabilizers:";
    for (const auto& [order, n] : oc.stabilizer_profile.at(s))
      std::cout << " " << order << "x" << n;
    std::cout << "\n";
  }
  std::cout << "elapsed_ms=" << oc.elapsed_ms << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact stratum census, orbit counts and closed-form checks for "
               "tuples of 2x2 matrices over small finite fields"};
  app.require_subcommand(1);

  uint32_t q = 2;
  int m = 1;
  int workers = 0;
  std::string format = "table";
  std::string tuple_text, stratum_text, variant = "c", space_text = "rep";
  std::string grid_name = "default", fault_text;
  double budget_seconds = 0;
  uint64_t tuple_budget = env_tuple_budget();

  auto* census_cmd = app.add_subcommand("census", "exhaustive stratum census of (M_2)^m");
  census_cmd->add_option("--q", q, "field order")->required();
  census_cmd->add_option("--m", m, "number of generators")->required();
  census_cmd->add_option("--workers", workers, "worker threads (0 = all cores)");
  census_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));
  census_cmd->add_option("--tuple-budget", tuple_budget, "max tuples to enumerate");

  auto* orbits_cmd = app.add_subcommand("orbits", "PGL_2 orbit census per stratum");
  orbits_cmd->add_option("--q", q)->required();
  orbits_cmd->add_option("--m", m)->required();
  orbits_cmd->add_option("--workers", workers, "1 = sequential sweep");
  orbits_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
  orbits_cmd->add_option("--tuple-budget", tuple_budget);

  auto* classify_cmd = app.add_subcommand("classify", "stratum of one matrix tuple");
  classify_cmd->add_option("--q", q)->required();
  classify_cmd
      ->add_option("--tuple", tuple_text,
                   "4m field-element indices, comma-separated, matrix-major "
                   "(a11,a12,a21,a22 per matrix)")
      ->required();

  auto* formulas_cmd = app.add_subcommand("formulas", "closed forms, optionally evaluated");
  formulas_cmd->add_option("--m", m)->required();
  uint64_t eval_q = 0;
  formulas_cmd->add_option("--q", eval_q, "evaluate each formula at q");
  formulas_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  auto* vhp_cmd = app.add_subcommand("vhp", "virtual Hodge polynomials");
  vhp_cmd->add_option("--m", m)->required();
  vhp_cmd->add_option("--stratum", stratum_text, "sc|ss|u|borel|air|total (default: all)");
  vhp_cmd->add_option("--variant", variant)->check(CLI::IsMember({"c", "ordinary"}));
  vhp_cmd->add_option("--space", space_text)->check(CLI::IsMember({"rep", "ch"}));

  auto* zeta_cmd = app.add_subcommand("zeta", "Weil zeta factorization and checks");
  std::string zeta_space_text;
  zeta_cmd->add_option("--space", zeta_space_text)
      ->check(CLI::IsMember({"rep_air", "ch_air", "ch_total"}))
      ->required();
  zeta_cmd->add_option("--m", m)->required();
  zeta_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text", "table"}));

  auto* verify_cmd = app.add_subcommand("verify", "run the verification matrix");
  verify_cmd->add_option("--grid", grid_name)->check(CLI::IsMember({"default", "extended"}));
  verify_cmd->add_option("--budget-seconds", budget_seconds,
                         "skip remaining cells once spent (0 = unlimited)");
  verify_cmd->add_option("--workers", workers);
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text", "table"}));
  verify_cmd->add_option("--tuple-budget", tuple_budget);
  verify_cmd->add_option("--inject-fault", fault_text,
                         "perturb one stored formula coefficient "
                         "(space:stratum:kind:m:exp:delta); for testing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);      // prints help or the error message
    return code == 0 ? 0 : 2;    // any parse failure is an invalid-arguments exit
  }

  if (census_cmd->parsed()) {
    CensusOptions opts;
    opts.workers = workers;
    opts.tuple_budget = tuple_budget;
    StratumCensus sc = census(q, m, opts);
    if (format == "json")
      std::cout << sc.to_json().dump() << "\n";
    else if (format == "csv")
      std::cout << sc.to_csv();
    else
      print_census_table(sc);
    return 0;
  }

  if (orbits_cmd->parsed()) {
    OrbitOptions opts;
    opts.workers = workers > 0 ? workers : 1;
    opts.tuple_budget = tuple_budget;
    OrbitCensus oc = orbit_census(q, m, opts);
    if (format == "json")
      std::cout << oc.to_json().dump() << "\n";
    else
      print_orbits_table(oc);
    return 0;
  }

  if (classify_cmd->parsed()) {
    std::vector<uint32_t> entries = parse_csv_indices(tuple_text);
    if (entries.empty() || entries.size() % 4 != 0)
      throw std::invalid_argument("tuple needs 4m entries");
    FieldSpec spec = FieldSpec::of_order(q);
    std::vector<Mat2> tuple;
    for (size_t i = 0; i < entries.size(); i += 4) {
      for (size_t j = i; j < i + 4; ++j)
        if (entries[j] >= q) throw std::invalid_argument("entry index out of range");
      tuple.emplace_back(spec, entries[i], entries[i + 1], entries[i + 2], entries[i + 3]);
    }
    std::cout << stratum_name(classify(tuple)) << "\n";
    return 0;
  }

  if (formulas_cmd->parsed()) {
    auto keys = formula_keys();
    if (format == "json") {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const FormulaKey& key : keys) {
        LaurentPoly p = formula(key, m);
        nlohmann::ordered_json row{{"key", key.str()}, {"poly", p.str()},
                                   {"terms", p.to_json()}};
        if (eval_q >= 2) row["value"] = p.evaluate(BigInt(eval_q)).str();
        rows.push_back(std::move(row));
      }
      std::cout << nlohmann::ordered_json{{"m", m}, {"formulas", rows}}.dump() << "\n";
    } else {
      for (const FormulaKey& key : keys) {
        LaurentPoly p = formula(key, m);
        std::cout << std::left << std::setw(18) << key.str() << " " << p.str();
        if (eval_q >= 2) std::cout << "  = " << p.evaluate(BigInt(eval_q)).str();
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (vhp_cmd->parsed()) {
    Space space = space_from_name(space_text);
    bool compact = variant == "c";
    if (!stratum_text.empty()) {
      std::cout << vhp_formula(space, stratum_key_from_name(stratum_text), compact, m).str()
                << "\n";
    } else {
      for (StratumKey st : {StratumKey::Sc, StratumKey::Ss, StratumKey::U,
                            StratumKey::Borel, StratumKey::Air})
        std::cout << std::left << std::setw(6) << stratum_key_name(st) << " "
                  << vhp_formula(space, st, compact, m).str() << "\n";
    }
    return 0;
  }

  if (zeta_cmd->parsed()) {
    ZetaSpace space = zeta_space_from_name(zeta_space_text);
    ZetaFactorization zf = zeta_factorization(space, m);
    CheckResult counts = zeta_count_check(space, m);
    bool has_fe = space != ZetaSpace::ChTotal;
    PairingResult fe;
    if (has_fe) fe = functional_equation_check(space, m);
    if (format == "json") {
      nlohmann::ordered_json j{{"space", zeta_space_name(space)},
                               {"m", m},
                               {"num", zf.num},
                               {"den", zf.den}};
      j["functional_equation"] =
          has_fe ? (fe.exchange ? "antisymmetric" : "symmetric") : "none";
      j["shift"] = has_fe ? nlohmann::ordered_json(fe.shift) : nlohmann::ordered_json();
      j["checks"] = nlohmann::ordered_json{
          {"counts", counts.pass ? "pass" : "fail"},
          {"functional_equation", !has_fe ? "n/a" : (fe.pass ? "pass" : "fail")}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "Z(" << zeta_space_name(space) << ", q, t) = " << zf.str() << "\n";
      std::cout << "counts: " << (counts.pass ? "ok" : "FAIL " + counts.detail) << "\n";
      if (has_fe) {
        std::cout << "functional equation (shift " << fe.shift << ", "
                  << (fe.exchange ? "num/den exchange" : "internal symmetry")
                  << "): " << (fe.pass ? "ok" : "FAIL") << "\n";
      } else {
        std::cout << "functional equation: none stated\n";
      }
    }
    return counts.pass && (!has_fe || fe.pass) ? 0 : 1;
  }

  if (verify_cmd->parsed()) {
    if (!fault_text.empty()) set_formula_fault(parse_fault(fault_text));
    VerifyOptions opts;
    opts.workers = workers;
    opts.budget_seconds = budget_seconds;
    opts.tuple_budget = tuple_budget;
    auto grid = grid_name == "extended" ? extended_grid() : default_grid();
    VerificationReport report = run_verification(grid, opts);
    if (format == "json")
      std::cout << report.to_json().dump() << "\n";
    else
      std::cout << report.summary();
    if (!report.overall_pass) return 1;
    if (report.skipped_cells > 0) return 3;
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
