#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "repvar2/mat2.hpp"
#include "repvar2/stratum.hpp"

#include <nlohmann/json_fwd.hpp>

namespace repvar2 {

Stratum classify(std::span<const Mat2> tuple);  // throws EmptyTupleError

// Field orders the exhaustive enumeration paths accept.
bool is_supported_order(uint32_t q);
std::vector<uint32_t> supported_orders();

// Bijection between tuple indices in [0, q^{4m}) and m-tuples of matrices.
// The base-q digits of an index are the element indices of the 4m entries,
// matrix-major with entry order a11, a12, a21, a22, the a11 digit of the
// first matrix least significant.
class TupleCodec {
 public:
  TupleCodec(const FieldSpec& spec, int m);

  uint64_t size() const { return total_; }  // q^{4m}
  int generators() const { return m_; }

  uint64_t encode(std::span<const Mat2> tuple) const;
  std::vector<Mat2> decode(uint64_t index) const;  // throws IndexOutOfRangeError
  // Raw digit form, 4m entry indices.
  void digits(uint64_t index, uint32_t* out) const;

 private:
  const FieldSpec* spec_;
  int m_;
  uint64_t total_;
};

constexpr uint64_t kDefaultTupleBudget = 100'000'000;

struct CensusOptions {
  int workers = 0;  // 0 = hardware concurrency
  uint64_t tuple_budget = kDefaultTupleBudget;
};

// Exact point counts of the five strata for one (q, m).
struct StratumCensus {
  uint32_t q = 0;
  int m = 0;
  std::map<Stratum, uint64_t> counts;
  uint64_t total = 0;
  int64_t elapsed_ms = 0;

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;  // header + one row
};

// Classifies every one of the q^{4m} tuples exactly once. The index range is
// split into contiguous blocks per worker and partial counts merge by
// addition, so the result is independent of the worker count.
StratumCensus census(uint32_t q, int m, const CensusOptions& opts = {});

}  // namespace repvar2
