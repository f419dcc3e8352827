#include "repvar2/stratify.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "repvar2/bigint.hpp"
#include "repvar2/hot_classify.hpp"

#include <nlohmann/json.hpp>

namespace repvar2 {

const char* stratum_name(Stratum s) {
  switch (s) {
    case Stratum::Sc: return "sc";
    case Stratum::Ss: return "ss";
    case Stratum::U: return "u";
    case Stratum::Borel: return "borel";
    case Stratum::Air: return "air";
  }
  return "?";
}

Stratum stratum_from_name(const std::string& name) {
  for (Stratum s : kAllStrata)
    if (name == stratum_name(s)) return s;
  throw std::invalid_argument("unknown stratum: " + name);
}

bool is_supported_order(uint32_t q) {
  for (uint32_t s : supported_orders())
    if (s == q) return true;
  return false;
}

std::vector<uint32_t> supported_orders() { return {2, 3, 4, 5, 7, 8, 9, 11, 13}; }

Stratum classify(std::span<const Mat2> tuple) {
  SubalgebraBasis alg = subalgebra_dim(tuple);
  switch (alg.dim) {
    case 1: return Stratum::Sc;
    case 3: return Stratum::Borel;
    case 4: return Stratum::Air;
    default: break;
  }
  // Dimension 2: semisimple iff the characteristic discriminant of a
  // non-scalar algebra element is nonzero. Any non-scalar choice gives the
  // same verdict: disc(aI + bB) = b^2 disc(B).
  for (const Mat2& b : alg.basis) {
    if (!b.is_scalar()) return b.disc().is_zero() ? Stratum::U : Stratum::Ss;
  }
  throw std::logic_error("dimension-2 algebra with scalar basis");
}

TupleCodec::TupleCodec(const FieldSpec& spec, int m) : spec_(&spec), m_(m) {
  if (m < 1) throw EmptyTupleError();
  BigInt total = 1;
  for (int i = 0; i < 4 * m; ++i) total *= spec.order();
  if (total > BigInt(UINT64_MAX))
    throw TooLargeError("tuple space exceeds 64-bit indexing");
  total_ = static_cast<uint64_t>(total);
}

uint64_t TupleCodec::encode(std::span<const Mat2> tuple) const {
  if (static_cast<int>(tuple.size()) != m_)
    throw IndexOutOfRangeError("tuple length does not match codec");
  uint64_t q = spec_->order();
  uint64_t idx = 0;
  for (int j = m_ - 1; j >= 0; --j) {
    const auto& e = tuple[j].entries();
    for (int i = 3; i >= 0; --i) idx = idx * q + e[i];
  }
  return idx;
}

void TupleCodec::digits(uint64_t index, uint32_t* out) const {
  uint64_t q = spec_->order();
  for (int i = 0; i < 4 * m_; ++i) {
    out[i] = static_cast<uint32_t>(index % q);
    index /= q;
  }
}

std::vector<Mat2> TupleCodec::decode(uint64_t index) const {
  if (index >= total_)
    throw IndexOutOfRangeError("tuple index " + std::to_string(index));
  std::vector<uint32_t> d(4 * m_);
  digits(index, d.data());
  std::vector<Mat2> tuple;
  tuple.reserve(m_);
  for (int j = 0; j < m_; ++j)
    tuple.emplace_back(*spec_, d[4 * j], d[4 * j + 1], d[4 * j + 2], d[4 * j + 3]);
  return tuple;
}

namespace {

void census_range(const HotClassifier& hc, int m, uint64_t lo, uint64_t hi,
                  uint64_t* counts) {
  uint32_t q = hc.q;
  uint32_t digits[4 * kMaxGenerators];
  uint64_t v = lo;
  for (int i = 0; i < 4 * m; ++i) {
    digits[i] = static_cast<uint32_t>(v % q);
    v /= q;
  }
  for (uint64_t idx = lo; idx < hi; ++idx) {
    counts[static_cast<int>(hc.classify(digits, m))]++;
    // odometer step
    for (int i = 0; i < 4 * m; ++i) {
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
  }
}

}  // namespace

StratumCensus census(uint32_t q, int m, const CensusOptions& opts) {
  if (!is_supported_order(q))
    throw UnsupportedFieldError("q = " + std::to_string(q) +
                                " is not a supported enumeration order");
  if (m < 1) throw EmptyTupleError();
  if (m > kMaxGenerators) throw TooLargeError("too many generators");

  BigInt required = 1;
  for (int i = 0; i < 4 * m; ++i) required *= q;
  if (required > BigInt(opts.tuple_budget))
    throw BudgetExceededError(required.str(), std::to_string(opts.tuple_budget));
  uint64_t total = static_cast<uint64_t>(required);

  auto t0 = std::chrono::steady_clock::now();
  FieldSpec spec = FieldSpec::of_order(q);
  HotClassifier hc(spec);

  int workers = opts.workers > 0
                    ? opts.workers
                    : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<int>(std::min<uint64_t>(workers, total));

  std::vector<std::array<uint64_t, 5>> partial(workers, {0, 0, 0, 0, 0});
  if (workers == 1) {
    census_range(hc, m, 0, total, partial[0].data());
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      uint64_t lo = total / workers * w + std::min<uint64_t>(total % workers, w);
      uint64_t hi = lo + total / workers + (static_cast<uint64_t>(w) < total % workers);
      pool.emplace_back(census_range, std::cref(hc), m, lo, hi, partial[w].data());
    }
    for (auto& t : pool) t.join();
  }

  StratumCensus out;
  out.q = q;
  out.m = m;
  out.total = total;
  for (Stratum s : kAllStrata) {
    uint64_t n = 0;
    for (const auto& part : partial) n += part[static_cast<int>(s)];
    out.counts[s] = n;
  }
  out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return out;
}

nlohmann::ordered_json StratumCensus::to_json() const {
  nlohmann::ordered_json counts_json;
  for (Stratum s : kAllStrata) counts_json[stratum_name(s)] = counts.at(s);
  return nlohmann::ordered_json{{"q", q},
                                {"m", m},
                                {"counts", counts_json},
                                {"total", total},
                                {"elapsed_ms", elapsed_ms}};
}

std::string StratumCensus::to_csv() const {
  std::string row = std::to_string(q) + "," + std::to_string(m);
  for (Stratum s : kAllStrata) row += "," + std::to_string(counts.at(s));
  row += "," + std::to_string(total) + "," + std::to_string(elapsed_ms);
  return "q,m,sc,ss,u,borel,air,total,elapsed_ms\n" + row + "\n";
}

}  // namespace repvar2
