#include "repvar2/orbits.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "repvar2/bigint.hpp"
#include "repvar2/hot_classify.hpp"

#include <nlohmann/json.hpp>

namespace repvar2 {

namespace {

// Conjugation action of every PGL_2 element on the q^4 single-matrix
// indices, tabulated once per run.
struct ConjAction {
  const FieldSpec& spec;
  uint32_t q;
  uint32_t q4;
  std::vector<PglElement> group;
  std::vector<uint16_t> table;  // group.size() * q4

  explicit ConjAction(const FieldSpec& f) : spec(f), q(f.order()) {
    q4 = q * q * q * q;
    group = enumerate_pgl2(f);
    table.resize(group.size() * static_cast<size_t>(q4));
    for (size_t p = 0; p < group.size(); ++p) {
      for (uint32_t idx = 0; idx < q4; ++idx) {
        uint32_t v = idx;
        std::array<uint32_t, 4> e;
        for (int i = 0; i < 4; ++i) {
          e[i] = v % q;
          v /= q;
        }
        Mat2 conj = group[p].conjugate(Mat2(spec, e));
        const auto& c = conj.entries();
        table[p * q4 + idx] =
            static_cast<uint16_t>(((c[3] * q + c[2]) * q + c[1]) * q + c[0]);
      }
    }
  }

  size_t group_order() const { return group.size(); }

  // Image of a tuple index under group element p.
  uint64_t apply(size_t p, const uint32_t* mat_digits, int m) const {
    const uint16_t* row = table.data() + p * q4;
    uint64_t out = 0;
    for (int j = m - 1; j >= 0; --j) out = out * q4 + row[mat_digits[j]];
    return out;
  }
};

void mat_digits_of(uint64_t index, uint32_t q4, int m, uint32_t* out) {
  for (int j = 0; j < m; ++j) {
    out[j] = static_cast<uint32_t>(index % q4);
    index /= q4;
  }
}

void entry_digits_of(const uint32_t* mat_digits, uint32_t q, int m, uint32_t* out) {
  for (int j = 0; j < m; ++j) {
    uint32_t v = mat_digits[j];
    for (int i = 0; i < 4; ++i) {
      out[4 * j + i] = v % q;
      v /= q;
    }
  }
}

uint64_t checked_total(uint32_t q, int m, const OrbitOptions& opts, size_t group_order) {
  BigInt required = 1;
  for (int i = 0; i < 4 * m; ++i) required *= q;
  if (required > BigInt(opts.tuple_budget))
    throw BudgetExceededError(required.str(), std::to_string(opts.tuple_budget));
  BigInt ops = required * group_order;
  if (ops > BigInt(opts.op_budget))
    throw BudgetExceededError(ops.str() + " group operations",
                              std::to_string(opts.op_budget));
  return static_cast<uint64_t>(required);
}

struct OrbitAccumulator {
  std::array<uint64_t, 5> orbit_counts{};
  std::map<uint64_t, uint64_t> stabilizers[5];

  void record(Stratum s, uint64_t stab) {
    orbit_counts[static_cast<int>(s)]++;
    stabilizers[static_cast<int>(s)][stab]++;
  }

  void merge(const OrbitAccumulator& o) {
    for (int i = 0; i < 5; ++i) {
      orbit_counts[i] += o.orbit_counts[i];
      for (const auto& [k, v] : o.stabilizers[i]) stabilizers[i][k] += v;
    }
  }
};

}  // namespace

OrbitCensus orbit_census(uint32_t q, int m, const OrbitOptions& opts) {
  if (!is_supported_order(q))
    throw UnsupportedFieldError("q = " + std::to_string(q) +
                                " is not a supported enumeration order");
  if (m < 1) throw EmptyTupleError();
  if (m > kMaxGenerators) throw TooLargeError("too many generators");

  auto t0 = std::chrono::steady_clock::now();
  FieldSpec spec = FieldSpec::of_order(q);
  ConjAction action(spec);
  uint64_t total = checked_total(q, m, opts, action.group_order());
  HotClassifier hc(spec);
  uint64_t group_order = action.group_order();

  uint32_t mats[kMaxGenerators];
  uint32_t entries[4 * kMaxGenerators];

  auto orbit_of = [&](uint64_t index, std::vector<uint64_t>& images) {
    mat_digits_of(index, action.q4, m, mats);
    images.clear();
    for (size_t p = 0; p < group_order; ++p) images.push_back(action.apply(p, mats, m));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
  };

  auto classify_index = [&](uint64_t index) {
    mat_digits_of(index, action.q4, m, mats);
    entry_digits_of(mats, q, m, entries);
    return hc.classify(entries, m);
  };

  OrbitAccumulator acc;
  std::vector<uint64_t> images;
  images.reserve(group_order);

  int workers = std::max(1, opts.workers);
  if (workers == 1) {
    std::vector<uint64_t> visited((total + 63) / 64, 0);
    for (uint64_t i = 0; i < total; ++i) {
      if (visited[i >> 6] >> (i & 63) & 1) continue;
      orbit_of(i, images);
      for (uint64_t y : images) visited[y >> 6] |= 1ull << (y & 63);
      uint64_t size = images.size();
      if (group_order % size != 0)
        throw std::logic_error("orbit size does not divide the group order");
      acc.record(classify_index(i), group_order / size);
    }
  } else {
    // Canonical-representative partition: each worker keeps exactly the
    // orbits whose minimal index falls in its range, so the merged result
    // is identical to the sequential sweep.
    std::vector<OrbitAccumulator> parts(workers);
    auto run = [&](int w, uint64_t lo, uint64_t hi) {
      HotClassifier whc(spec);
      uint32_t wmats[kMaxGenerators];
      uint32_t wentries[4 * kMaxGenerators];
      std::vector<uint64_t> wimages;
      wimages.reserve(group_order);
      for (uint64_t i = lo; i < hi; ++i) {
        mat_digits_of(i, action.q4, m, wmats);
        wimages.clear();
        for (size_t p = 0; p < group_order; ++p)
          wimages.push_back(action.apply(p, wmats, m));
        std::sort(wimages.begin(), wimages.end());
        if (wimages.front() != i) continue;
        wimages.erase(std::unique(wimages.begin(), wimages.end()), wimages.end());
        entry_digits_of(wmats, q, m, wentries);
        parts[w].record(whc.classify(wentries, m), group_order / wimages.size());
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      uint64_t lo = total / workers * w + std::min<uint64_t>(total % workers, w);
      uint64_t hi = lo + total / workers + (static_cast<uint64_t>(w) < total % workers);
      pool.emplace_back(run, w, lo, hi);
    }
    for (auto& t : pool) t.join();
    for (const auto& part : parts) acc.merge(part);
  }

  OrbitCensus out;
  out.q = q;
  out.m = m;
  for (Stratum s : kAllStrata) {
    out.orbit_counts[s] = acc.orbit_counts[static_cast<int>(s)];
    out.stabilizer_profile[s] = acc.stabilizers[static_cast<int>(s)];
  }
  out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return out;
}

uint64_t stabilizer_order(std::span<const Mat2> tuple) {
  if (tuple.empty()) throw EmptyTupleError();
  const FieldSpec& spec = tuple.front().spec();
  uint64_t count = 0;
  for (const PglElement& p : enumerate_pgl2(spec)) {
    bool fixes = true;
    for (const Mat2& a : tuple) {
      // P A P^-1 = A iff the representative commutes with A.
      if (p.rep() * a != a * p.rep()) {
        fixes = false;
        break;
      }
    }
    if (fixes) ++count;
  }
  return count;
}

FreeActionReport check_free_action(uint32_t q, int m, Stratum stratum,
                                   const OrbitOptions& opts) {
  if (!is_supported_order(q))
    throw UnsupportedFieldError("q = " + std::to_string(q) +
                                " is not a supported enumeration order");
  FieldSpec spec = FieldSpec::of_order(q);
  ConjAction action(spec);
  uint64_t total = checked_total(q, m, opts, action.group_order());
  HotClassifier hc(spec);
  uint64_t group_order = action.group_order();

  FreeActionReport report;
  report.stratum = stratum;
  report.group_order = group_order;
  report.free = true;

  uint32_t mats[kMaxGenerators];
  uint32_t entries[4 * kMaxGenerators];
  std::vector<uint64_t> visited((total + 63) / 64, 0);
  std::vector<uint64_t> images;
  images.reserve(group_order);

  for (uint64_t i = 0; i < total; ++i) {
    mat_digits_of(i, action.q4, m, mats);
    entry_digits_of(mats, q, m, entries);
    if (hc.classify(entries, m) != stratum) continue;
    report.points++;
    // Stabilizer by direct count of fixing elements.
    uint64_t stab = 0;
    for (size_t p = 0; p < group_order; ++p)
      if (action.apply(p, mats, m) == i) ++stab;
    if (stab != 1 && report.free) {
      report.free = false;
      report.first_counterexample = i;
      report.counterexample_stabilizer = stab;
    }
    if (visited[i >> 6] >> (i & 63) & 1) continue;
    images.clear();
    for (size_t p = 0; p < group_order; ++p) images.push_back(action.apply(p, mats, m));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    for (uint64_t y : images) visited[y >> 6] |= 1ull << (y & 63);
    report.orbits++;
  }
  report.orbit_product_ok = report.orbits * group_order == report.points;
  return report;
}

nlohmann::ordered_json OrbitCensus::to_json() const {
  nlohmann::ordered_json orbits_json;
  for (Stratum s : kAllStrata) orbits_json[stratum_name(s)] = orbit_counts.at(s);
  nlohmann::ordered_json stab_json;
  for (Stratum s : kAllStrata) {
    nlohmann::ordered_json prof;
    for (const auto& [order, n] : stabilizer_profile.at(s))
      prof[std::to_string(order)] = n;
    stab_json[stratum_name(s)] = prof;
  }
  return nlohmann::ordered_json{
      {"q", q}, {"m", m}, {"orbits", orbits_json}, {"stabilizers", stab_json}};
}

}  // namespace repvar2
