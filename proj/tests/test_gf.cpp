#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repvar2/gf.hpp"
#include "repvar2/stratify.hpp"

using namespace repvar2;

namespace {

// Test-side irreducibility oracle: a polynomial over F_p (constant term
// first, monic) is reducible iff some monic factor of degree 1..deg/2
// divides it, checked here by evaluating all candidate roots for quadratics
// and cubics. Independent of the library's trial-division scan.
bool has_root(const std::vector<int>& f, int p) {
  for (int x = 0; x < p; ++x) {
    long long acc = 0, xp = 1;
    for (int c : f) {
      acc = (acc + c * xp) % p;
      xp = xp * x % p;
    }
    if (acc % p == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("make_field picks the expected moduli") {
  FieldSpec f2(2, 1);
  CHECK(f2.order() == 2);
  CHECK(f2.modulus() == std::vector<int>{0, 1});

  // F_4: the only irreducible monic quadratic over F_2 is x^2+x+1.
  FieldSpec f4(2, 2);
  CHECK(f4.modulus() == std::vector<int>{1, 1, 1});
  for (int c0 = 0; c0 < 2; ++c0)
    for (int c1 = 0; c1 < 2; ++c1) {
      std::vector<int> f{c0, c1, 1};
      if (f == f4.modulus())
        CHECK(!has_root(f, 2));
      else
        CHECK(has_root(f, 2));  // every other monic quadratic splits
    }

  // F_9: lexicographic scan (low degree first) reaches x^2+1 first.
  FieldSpec f9(3, 2);
  CHECK(f9.modulus() == std::vector<int>{1, 0, 1});
  CHECK(!has_root({1, 0, 1}, 3));
  CHECK(has_root({0, 0, 1}, 3));  // the candidates scanned before it
  CHECK(has_root({0, 1, 1}, 3));
  CHECK(has_root({0, 2, 1}, 3));
}

TEST_CASE("make_field rejects bad input") {
  CHECK_THROWS_AS(FieldSpec(4, 1), NotPrimeError);
  CHECK_THROWS_AS(FieldSpec(6, 2), NotPrimeError);
  CHECK_THROWS_AS(FieldSpec(2, 17), TooLargeError);
  CHECK_THROWS_AS(FieldSpec(257, 2), TooLargeError);
  CHECK_THROWS_AS(FieldSpec::of_order(6), NotPrimeError);
  CHECK_THROWS_AS(FieldSpec::of_order(12), NotPrimeError);
  CHECK(FieldSpec::of_order(8).degree() == 3);
  CHECK(FieldSpec::of_order(49).characteristic() == 7);
}

TEST_CASE("field op examples") {
  FieldSpec f2(2, 1);
  CHECK(f2.one() + f2.one() == f2.zero());

  FieldSpec f4(2, 2);
  FieldElement x = f4.from_coeffs({0, 1});
  FieldElement xp1 = f4.from_coeffs({1, 1});
  CHECK(x * x == xp1);  // x^2 reduces by x^2+x+1

  FieldSpec f5(5, 1);
  CHECK(f5.element(2).inv() == f5.element(3));
  CHECK_THROWS_AS(f5.zero().inv(), DivisionByZeroError);

  FieldSpec f3(3, 1);
  CHECK_THROWS_AS(f3.one() + f5.one(), FieldMismatchError);
}

TEST_CASE("frobenius examples") {
  FieldSpec f4(2, 2);
  CHECK(f4.from_coeffs({0, 1}).frobenius() == f4.from_coeffs({1, 1}));

  FieldSpec f9(3, 2);
  CHECK(f9.from_coeffs({0, 1}).frobenius() == f9.from_coeffs({0, 2}));  // x^3 = -x

  for (int p : {2, 3, 5, 7, 11, 13}) {
    FieldSpec f(p, 1);
    for (auto a : f.elements()) CHECK(a.frobenius() == a);  // Fermat
  }
}

TEST_CASE("element enumeration order") {
  FieldSpec f2(2, 1);
  CHECK(f2.elements().size() == 2);
  FieldSpec f3(3, 1);
  auto e3 = f3.elements();
  for (uint32_t i = 0; i < 3; ++i) CHECK(e3[i].index() == i);

  FieldSpec f4(2, 2);
  auto e4 = f4.elements();
  CHECK(e4[0].coeffs() == std::vector<int>{0, 0});
  CHECK(e4[1].coeffs() == std::vector<int>{1, 0});
  CHECK(e4[2].coeffs() == std::vector<int>{0, 1});
  CHECK(e4[3].coeffs() == std::vector<int>{1, 1});
  CHECK(e4[2].str() == "x");
  CHECK(e4[3].str() == "x+1");
}

TEST_CASE("field axioms hold exhaustively for every supported order") {
  for (uint32_t q : supported_orders()) {
    FieldSpec f = FieldSpec::of_order(q);
    CAPTURE(q);
    for (uint32_t a = 1; a < q; ++a)
      CHECK(f.mul_idx(a, f.inv_idx(a)) == 1);
    for (uint32_t a = 0; a < q; ++a) {
      CHECK(f.pow_idx(a, q) == a);  // a^q = a
      CHECK(f.add_idx(a, f.neg_idx(a)) == 0);
    }
    // Frobenius is a k-fold involution back to the identity.
    for (uint32_t a = 0; a < q; ++a) {
      uint32_t b = a;
      for (int i = 0; i < f.degree(); ++i) b = f.frobenius_idx(b);
      CHECK(b == a);
    }
  }
}

TEST_CASE("frobenius is a field homomorphism for q <= 9") {
  for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    FieldSpec f = FieldSpec::of_order(q);
    for (uint32_t a = 0; a < q; ++a)
      for (uint32_t b = 0; b < q; ++b) {
        CHECK(f.frobenius_idx(f.add_idx(a, b)) ==
              f.add_idx(f.frobenius_idx(a), f.frobenius_idx(b)));
        CHECK(f.frobenius_idx(f.mul_idx(a, b)) ==
              f.mul_idx(f.frobenius_idx(a), f.frobenius_idx(b)));
      }
  }
}

TEST_CASE("enumeration is stable across independent constructions") {
  FieldSpec a(3, 2), b(3, 2);
  CHECK(a.modulus() == b.modulus());
  for (uint32_t i = 0; i < a.order(); ++i) {
    CHECK(a.coeffs_of(i) == b.coeffs_of(i));
    for (uint32_t j = 0; j < a.order(); ++j) CHECK(a.mul_idx(i, j) == b.mul_idx(i, j));
  }
}

TEST_CASE("tables agree with polynomial arithmetic") {
  // q = 9 has tables; recompute products through coefficient arithmetic.
  FieldSpec f(3, 2);
  auto mul_by_hand = [&](uint32_t ai, uint32_t bi) {
    auto a = f.coeffs_of(ai), b = f.coeffs_of(bi);
    // (a0 + a1 x)(b0 + b1 x) mod x^2 + 1 = (a0 b0 - a1 b1) + (a0 b1 + a1 b0) x
    int c0 = ((a[0] * b[0] - a[1] * b[1]) % 3 + 3) % 3;
    int c1 = (a[0] * b[1] + a[1] * b[0]) % 3;
    return f.index_of({c0, c1});
  };
  for (uint32_t a = 0; a < 9; ++a)
    for (uint32_t b = 0; b < 9; ++b) CHECK(f.mul_idx(a, b) == mul_by_hand(a, b));
}
