#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "repvar2/hot_classify.hpp"
#include "repvar2/stratify.hpp"

using namespace repvar2;

namespace {

// Independent classifier for single matrices: the algebra generated by one
// matrix is span{I, A} (Cayley-Hamilton), so the verdict only needs
// scalarity and the discriminant.
Stratum classify_single_oracle(const Mat2& a) {
  if (a.is_scalar()) return Stratum::Sc;
  return a.disc().is_zero() ? Stratum::U : Stratum::Ss;
}

uint64_t expect_counts(const StratumCensus& sc, uint64_t s, uint64_t ss, uint64_t u,
                       uint64_t b, uint64_t air) {
  CHECK(sc.counts.at(Stratum::Sc) == s);
  CHECK(sc.counts.at(Stratum::Ss) == ss);
  CHECK(sc.counts.at(Stratum::U) == u);
  CHECK(sc.counts.at(Stratum::Borel) == b);
  CHECK(sc.counts.at(Stratum::Air) == air);
  return s + ss + u + b + air;
}

}  // namespace

TEST_CASE("classify examples") {
  for (uint32_t q : {2u, 3u, 5u, 9u}) {
    FieldSpec f = FieldSpec::of_order(q);
    std::vector<Mat2> diag{Mat2::diag(f, 0, 1)};
    CHECK(classify(diag) == Stratum::Ss);
    std::vector<Mat2> nil{Mat2::unit(f, 1, 2)};
    CHECK(classify(nil) == Stratum::U);
  }
  FieldSpec f2(2, 1);
  std::vector<Mat2> air{Mat2::unit(f2, 1, 2), Mat2::unit(f2, 2, 1)};
  CHECK(classify(air) == Stratum::Air);
  // Irreducible characteristic polynomial: non-split semisimple.
  std::vector<Mat2> nonsplit{Mat2(f2, 0, 1, 1, 1)};
  CHECK(classify(nonsplit) == Stratum::Ss);
  std::vector<Mat2> borel{Mat2::unit(f2, 1, 2), Mat2::unit(f2, 1, 1)};
  CHECK(classify(borel) == Stratum::Borel);
  CHECK_THROWS_AS(classify(std::span<const Mat2>{}), EmptyTupleError);
}

TEST_CASE("classify agrees with the single-matrix oracle") {
  for (uint32_t q : {2u, 3u, 4u, 5u}) {
    FieldSpec f = FieldSpec::of_order(q);
    TupleCodec codec(f, 1);
    for (uint64_t i = 0; i < codec.size(); ++i) {
      auto tuple = codec.decode(i);
      CHECK(classify(tuple) == classify_single_oracle(tuple[0]));
    }
  }
}

TEST_CASE("classify is conjugation invariant") {
  FieldSpec f2(2, 1);
  auto group = enumerate_pgl2(f2);
  TupleCodec codec(f2, 2);
  for (uint64_t i = 0; i < codec.size(); ++i) {
    auto tuple = codec.decode(i);
    Stratum s = classify(tuple);
    for (const auto& p : group) {
      std::vector<Mat2> conj{p.conjugate(tuple[0]), p.conjugate(tuple[1])};
      CHECK(classify(conj) == s);
    }
  }
  // Sampled at q = 3, m = 2.
  FieldSpec f3(3, 1);
  auto group3 = enumerate_pgl2(f3);
  TupleCodec codec3(f3, 2);
  std::mt19937 rng(101);
  std::uniform_int_distribution<uint64_t> pick(0, codec3.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    auto tuple = codec3.decode(pick(rng));
    Stratum s = classify(tuple);
    for (const auto& p : group3) {
      std::vector<Mat2> conj{p.conjugate(tuple[0]), p.conjugate(tuple[1])};
      CHECK(classify(conj) == s);
    }
  }
}

TEST_CASE("tuple codec conventions") {
  FieldSpec f2(2, 1);
  TupleCodec codec(f2, 1);
  CHECK(codec.size() == 16);
  auto zero = codec.decode(0);
  CHECK(zero[0] == Mat2::zero(f2));
  // a11 is the least significant digit, entries in scan order a11,a12,a21,a22.
  CHECK(codec.decode(1)[0] == Mat2(f2, 1, 0, 0, 0));
  CHECK(codec.decode(2)[0] == Mat2(f2, 0, 1, 0, 0));
  CHECK(codec.decode(4)[0] == Mat2(f2, 0, 0, 1, 0));
  CHECK(codec.decode(8)[0] == Mat2(f2, 0, 0, 0, 1));
  CHECK_THROWS_AS(codec.decode(16), IndexOutOfRangeError);
}

TEST_CASE("tuple codec round-trips at (q=5, m=2)") {
  FieldSpec f5(5, 1);
  TupleCodec codec(f5, 2);
  std::mt19937 rng(42);
  std::uniform_int_distribution<uint64_t> pick(0, codec.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    uint64_t idx = pick(rng);
    CHECK(codec.encode(codec.decode(idx)) == idx);
  }
}

TEST_CASE("table-driven classifier agrees with the generic path") {
  FieldSpec f2(2, 1);
  HotClassifier hot2(f2);
  TupleCodec codec2(f2, 2);
  for (uint64_t i = 0; i < codec2.size(); ++i) {
    auto tuple = codec2.decode(i);
    uint32_t digits[8];
    codec2.digits(i, digits);
    CHECK(hot2.classify(digits, 2) == classify(tuple));
  }
  for (uint32_t q : {3u, 5u, 9u}) {
    FieldSpec f = FieldSpec::of_order(q);
    HotClassifier hot(f);
    TupleCodec codec(f, 2);
    std::mt19937 rng(q);
    std::uniform_int_distribution<uint64_t> pick(0, codec.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      uint64_t i = pick(rng);
      auto tuple = codec.decode(i);
      uint32_t digits[8];
      codec.digits(i, digits);
      CHECK(hot.classify(digits, 2) == classify(tuple));
    }
  }
}

TEST_CASE("census anchor values") {
  auto c21 = census(2, 1);
  CHECK(expect_counts(c21, 2, 8, 6, 0, 0) == 16);
  CHECK(c21.total == 16);

  auto c22 = census(2, 2);
  CHECK(expect_counts(c22, 4, 48, 36, 72, 96) == 256);

  auto c32 = census(3, 2);
  CHECK(expect_counts(c32, 9, 648, 288, 1728, 3888) == 6561);
}

TEST_CASE("census counts sum to q^{4m}") {
  for (auto [q, m] : std::vector<std::pair<uint32_t, int>>{
           {2, 1}, {3, 1}, {4, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    auto sc = census(q, m);
    uint64_t sum = 0;
    for (Stratum s : kAllStrata) sum += sc.counts.at(s);
    CHECK(sum == sc.total);
  }
}

TEST_CASE("one generator never reaches Borel or full algebra") {
  for (uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    auto sc = census(q, 1);
    CHECK(sc.counts.at(Stratum::Borel) == 0);
    CHECK(sc.counts.at(Stratum::Air) == 0);
  }
}

TEST_CASE("census is independent of the worker count") {
  for (int workers : {1, 2, 8}) {
    CensusOptions opts;
    opts.workers = workers;
    auto sc = census(3, 2, opts);
    CHECK(expect_counts(sc, 9, 648, 288, 1728, 3888) == 6561);
  }
}

TEST_CASE("census budget and validation errors") {
  CHECK_THROWS_AS(census(6, 1), UnsupportedFieldError);
  CHECK_THROWS_AS(census(16, 1), UnsupportedFieldError);
  CHECK_THROWS_AS(census(2, 0), EmptyTupleError);

  try {
    census(13, 3);  // 13^12 tuples
    FAIL("expected BudgetExceededError");
  } catch (const BudgetExceededError& e) {
    CHECK(e.required == "23298085122481");
  }

  CensusOptions small;
  small.tuple_budget = 10;
  CHECK_THROWS_AS(census(2, 1, small), BudgetExceededError);
}

TEST_CASE("census serialization shape") {
  auto sc = census(2, 2);
  auto j = sc.to_json();
  CHECK(j["q"] == 2);
  CHECK(j["m"] == 2);
  CHECK(j["counts"]["borel"] == 72);
  CHECK(j["total"] == 256);
  CHECK(j.contains("elapsed_ms"));
  std::string csv = sc.to_csv();
  CHECK(csv.rfind("q,m,sc,ss,u,borel,air,total,elapsed_ms\n", 0) == 0);
  CHECK(csv.find("2,2,4,48,36,72,96,256,") != std::string::npos);
}
