#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "repvar2/stratify.hpp"

namespace repvar2 {

struct OrbitOptions {
  // 1 = sequential visited-set sweep. More workers switch to the
  // canonical-representative partition, which must produce identical counts.
  int workers = 1;
  uint64_t tuple_budget = kDefaultTupleBudget;
  uint64_t op_budget = 5'000'000'000;  // group operations q^{4m} * |PGL_2|
};

// Exact PGL_2(F_q)-orbit counts per stratum, with the multiset of observed
// stabilizer orders (stabilizer order -> number of orbits).
struct OrbitCensus {
  uint32_t q = 0;
  int m = 0;
  std::map<Stratum, uint64_t> orbit_counts;
  std::map<Stratum, std::map<uint64_t, uint64_t>> stabilizer_profile;
  int64_t elapsed_ms = 0;

  nlohmann::ordered_json to_json() const;
};

// Sweeps every tuple index ascending; each unvisited index is expanded into
// its full conjugation orbit, the orbit is marked visited, and the orbit
// size gives the stabilizer order via orbit size * stabilizer = q^3 - q.
// Orbit counts are exact per stratum; the |stratum| / |PGL_2| shortcut is
// never used to produce them.
OrbitCensus orbit_census(uint32_t q, int m, const OrbitOptions& opts = {});

// Number of P in PGL_2(F_q) fixing every matrix of the tuple under
// conjugation. Always divides q^3 - q.
uint64_t stabilizer_order(std::span<const Mat2> tuple);

struct FreeActionReport {
  Stratum stratum;
  uint64_t points = 0;
  uint64_t orbits = 0;
  uint64_t group_order = 0;
  bool free = false;          // every stabilizer is trivial
  bool orbit_product_ok = false;  // orbits * group_order == points
  std::optional<uint64_t> first_counterexample;  // tuple index with stabilizer > 1
  uint64_t counterexample_stabilizer = 0;

  bool pass() const { return free && orbit_product_ok; }
};

// Directly recomputes the stabilizer of every point of the stratum and the
// orbit count, and reports the first non-trivial stabilizer if any.
// Failure is data, not an exception.
FreeActionReport check_free_action(uint32_t q, int m, Stratum stratum,
                                   const OrbitOptions& opts = {});

}  // namespace repvar2
