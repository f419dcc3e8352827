// End-to-end checks of the command-line tool: output formats, exit codes,
// determinism across runs. Drives the installed binary through popen.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <regex>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

std::string binary() {
  const char* env = std::getenv("REPVAR2_BIN");
  REQUIRE_MESSAGE(env != nullptr, "REPVAR2_BIN must point at the CLI binary");
  return env;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + "\"" + binary() + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string mask_elapsed(std::string text) {
  return std::regex_replace(text, std::regex("elapsed_ms\"?[:=][0-9]+"), "elapsed_ms:X");
}

}  // namespace

TEST_CASE("census json matches the documented shape") {
  auto r = run("census --q 2 --m 2 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"counts\":{\"sc\":4,\"ss\":48,\"u\":36,\"borel\":72,\"air\":96}") !=
        std::string::npos);
  CHECK(r.output.find("\"total\":256") != std::string::npos);
}

TEST_CASE("census csv has the stable column order") {
  auto r = run("census --q 2 --m 2 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("q,m,sc,ss,u,borel,air,total,elapsed_ms\n2,2,4,48,36,72,96,256,",
                       0) == 0);
}

TEST_CASE("output is deterministic for fixed arguments") {
  for (std::string args :
       {std::string("census --q 3 --m 2 --format json"), std::string("formulas --m 3 --q 2"),
        std::string("vhp --m 2 --space ch"), std::string("zeta --space ch_air --m 4 --format json"),
        std::string("orbits --q 3 --m 1 --format json")}) {
    auto a = run(args), b = run(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(mask_elapsed(a.output) == mask_elapsed(b.output));
  }
}

TEST_CASE("vhp prints the compact air polynomial") {
  auto r = run("vhp --m 2 --stratum air --variant c");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "z^8 - z^7 - z^6 + z^5\n");
  auto ordinary = run("vhp --m 2 --stratum air --variant ordinary");
  CHECK(ordinary.output == "z^3 - z^2 - z + 1\n");
}

TEST_CASE("classify maps tuples to strata") {
  CHECK(run("classify --q 2 --tuple 0,0,0,0").output == "sc\n");
  CHECK(run("classify --q 2 --tuple 0,1,0,0").output == "u\n");
  CHECK(run("classify --q 2 --tuple 0,1,0,0,0,0,1,0").output == "air\n");
  CHECK(run("classify --q 3 --tuple 0,0,0,1").output == "ss\n");
  CHECK(run("classify --q 2 --tuple 0,1,1,1").output == "ss\n");
}

TEST_CASE("zeta subcommand emits factorization and checks") {
  auto r = run("zeta --space rep_air --m 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("(1-q^6t)(1-q^7t) / (1-q^5t)(1-q^8t)") != std::string::npos);
  CHECK(r.output.find("counts: ok") != std::string::npos);
  CHECK(r.output.find("shift 13") != std::string::npos);

  auto j = run("zeta --space ch_total --m 2 --format json");
  CHECK(j.output.find("\"functional_equation\":\"none\"") != std::string::npos);
  CHECK(j.output.find("\"num\":[4],\"den\":[4,5]") != std::string::npos);
}

TEST_CASE("formulas lists every registry key") {
  auto r = run("formulas --m 2 --q 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("count:rep_air") != std::string::npos);
  CHECK(r.output.find("= 3888") != std::string::npos);
  CHECK(r.output.find("vhpc:ch_total") != std::string::npos);
}

TEST_CASE("exit code 2 on invalid arguments") {
  CHECK(run("census --q 6 --m 1").exit_code == 2);
  CHECK(run("census --m 1").exit_code == 2);
  CHECK(run("bogus").exit_code == 2);
  CHECK(run("classify --q 2 --tuple 0,1,2,0").exit_code == 2);  // index out of range
  CHECK(run("classify --q 2 --tuple 0,1,0").exit_code == 2);    // not 4m entries
  CHECK(run("vhp --m 2 --stratum nope").exit_code == 2);
  CHECK(run("verify --inject-fault garbage").exit_code == 2);
}

TEST_CASE("exit code 3 when the tuple budget is exceeded") {
  CHECK(run("census --q 13 --m 3").exit_code == 3);
  CHECK(run("census --q 2 --m 1", "MODULI_COUNT_BUDGET=10 ").exit_code == 3);
  CHECK(run("census --q 2 --m 1 --tuple-budget 10").exit_code == 3);
  // The flag overrides the environment.
  CHECK(run("census --q 2 --m 1 --tuple-budget 1000", "MODULI_COUNT_BUDGET=10 ").exit_code ==
        0);
}

TEST_CASE("help exits cleanly") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("census --help").exit_code == 0);
}

TEST_CASE("verify on the default grid passes") {
  auto r = run("verify --grid default");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("overall: PASS") != std::string::npos);
}

TEST_CASE("verify exits 3 when the time budget skips cells") {
  auto r = run("verify --budget-seconds 0.000001");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("skipped") != std::string::npos);
}

TEST_CASE("verify on a fault exits 1 and names the offending cell") {
  auto r = run("verify --inject-fault rep:air:count:2:5:1");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("census.count:rep_air") != std::string::npos);
  CHECK(r.output.find("q=2,m=2") != std::string::npos);
  CHECK(r.output.find("overall: FAIL") != std::string::npos);
}
