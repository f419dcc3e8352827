#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "repvar2/zeta.hpp"

using namespace repvar2;

TEST_CASE("factorization exponent sets") {
  auto rep2 = zeta_factorization(ZetaSpace::RepAir, 2);
  CHECK(rep2.num == std::vector<int>{6, 7});
  CHECK(rep2.den == std::vector<int>{5, 8});

  auto ch2 = zeta_factorization(ZetaSpace::ChAir, 2);
  CHECK(ch2.num == std::vector<int>{4});
  CHECK(ch2.den == std::vector<int>{5});

  auto ch4 = zeta_factorization(ZetaSpace::ChAir, 4);
  CHECK(ch4.num == std::vector<int>{8, 10});
  CHECK(ch4.den == std::vector<int>{11, 13});

  auto ch1 = zeta_factorization(ZetaSpace::ChAir, 1);
  CHECK(ch1.num.empty());
  CHECK(ch1.den.empty());

  auto total2 = zeta_factorization(ZetaSpace::ChTotal, 2);
  CHECK(total2.num == std::vector<int>{4});
  CHECK(total2.den == std::vector<int>{4, 5});
}

TEST_CASE("normalization cancels shared exponents") {
  auto norm = zeta_factorization(ZetaSpace::ChTotal, 2).normalized();
  CHECK(norm.num.empty());
  CHECK(norm.den == std::vector<int>{5});
  for (int m = 1; m <= 12; ++m) {
    for (ZetaSpace s : {ZetaSpace::RepAir, ZetaSpace::ChAir, ZetaSpace::ChTotal}) {
      auto n = zeta_factorization(s, m).normalized();
      for (int a : n.num)
        CHECK(std::find(n.den.begin(), n.den.end(), a) == n.den.end());
    }
  }
}

TEST_CASE("rendering") {
  CHECK(zeta_factorization(ZetaSpace::RepAir, 2).str() ==
        "(1-q^6t)(1-q^7t) / (1-q^5t)(1-q^8t)");
  CHECK(zeta_factorization(ZetaSpace::ChAir, 1).str() == "1 / 1");
}

TEST_CASE("point counts determine the factorizations") {
  // rep_air, m=2: q^8 + q^5 - q^7 - q^6 equals the air count.
  LaurentPoly sum = LaurentPoly::monomial(8, "q") + LaurentPoly::monomial(5, "q") -
                    LaurentPoly::monomial(7, "q") - LaurentPoly::monomial(6, "q");
  CHECK(sum == count_formula(Space::Rep, StratumKey::Air, 2));

  // ch_air, m=3: q^9 - q^6.
  CHECK(LaurentPoly::monomial(9, "q") - LaurentPoly::monomial(6, "q") ==
        count_formula(Space::Ch, StratumKey::Air, 3));

  // ch_total, m=2 evaluates to 32 = 2^5 at q=2.
  CHECK(count_formula(Space::Ch, StratumKey::Total, 2).evaluate(2) == 32);

  for (int m = 1; m <= 12; ++m)
    for (ZetaSpace s : {ZetaSpace::RepAir, ZetaSpace::ChAir, ZetaSpace::ChTotal}) {
      CAPTURE(m);
      CHECK(zeta_count_check(s, m).pass);
    }
}

TEST_CASE("functional equation pairings") {
  for (int m = 1; m <= 12; ++m) {
    auto rep = functional_equation_check(ZetaSpace::RepAir, m);
    CHECK(rep.pass);
    CHECK(rep.shift == 6 * m + 1);
    CHECK(!rep.exchange);

    auto ch = functional_equation_check(ZetaSpace::ChAir, m);
    CHECK(ch.pass);
    CHECK(ch.shift == 6 * m - 3);
    CHECK(ch.exchange);
  }

  // m=4 evidence: 21-8=13 and 21-10=11 map numerator onto denominator.
  auto ch4 = functional_equation_check(ZetaSpace::ChAir, 4);
  REQUIRE(ch4.pairing.size() == 4);
  CHECK(ch4.pairing[0] == std::pair<int, int>{8, 13});
  CHECK(ch4.pairing[1] == std::pair<int, int>{10, 11});

  // m=1 is an empty product, vacuously antisymmetric.
  CHECK(functional_equation_check(ZetaSpace::ChAir, 1).pass);

  CHECK_THROWS_AS(functional_equation_check(ZetaSpace::ChTotal, 2), std::invalid_argument);
}

TEST_CASE("negative control: off-by-one shifts fail") {
  for (int m = 1; m <= 12; ++m) {
    auto rep = zeta_factorization(ZetaSpace::RepAir, m);
    CHECK(!exponent_pairing(rep, 6 * m, false).pass);
    CHECK(!exponent_pairing(rep, 6 * m + 2, false).pass);
    if (m >= 2) {  // empty product at m=1 is symmetric under any shift
      auto ch = zeta_factorization(ZetaSpace::ChAir, m);
      CHECK(!exponent_pairing(ch, 6 * m - 4, true).pass);
      CHECK(!exponent_pairing(ch, 6 * m - 2, true).pass);
    }
  }
}

TEST_CASE("ch_total is ch_air with one extra denominator factor") {
  for (int m = 1; m <= 12; ++m) {
    auto air = zeta_factorization(ZetaSpace::ChAir, m);
    auto total = zeta_factorization(ZetaSpace::ChTotal, m);
    CHECK(total.num == air.num);
    auto extra = air.den;
    extra.push_back(2 * m);
    std::sort(extra.begin(), extra.end());
    CHECK(total.den == extra);
  }
}

TEST_CASE("space names round-trip") {
  for (ZetaSpace s : {ZetaSpace::RepAir, ZetaSpace::ChAir, ZetaSpace::ChTotal})
    CHECK(zeta_space_from_name(zeta_space_name(s)) == s);
  CHECK_THROWS_AS(zeta_space_from_name("rep_borel"), std::invalid_argument);
}
