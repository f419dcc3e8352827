#pragma once

#include <cstdint>

#include "repvar2/gf.hpp"
#include "repvar2/stratum.hpp"

namespace repvar2 {

constexpr int kMaxGenerators = 31;

// Table-driven stratum classifier used by the enumeration loops. Works on
// raw entry indices (4 per matrix, scan order a11, a12, a21, a22) and never
// allocates. Requires a FieldSpec with lookup tables.
struct HotClassifier {
  uint32_t q;
  const uint16_t* add;
  const uint16_t* sub;
  const uint16_t* mul;
  uint16_t four;

  explicit HotClassifier(const FieldSpec& spec)
      : q(spec.order()),
        add(spec.add_table()),
        sub(spec.sub_table()),
        mul(spec.mul_table()) {
    if (!spec.has_tables())
      throw UnsupportedFieldError("classifier needs a table-driven field");
    uint16_t two = add[1 * q + 1];
    four = mul[static_cast<uint32_t>(two) * q + two];
  }

  Stratum classify(const uint32_t* entries, int m) const {
    // Row-echelon basis of the span closure of {I, A_1, ..., A_m} inside
    // the 4-dimensional entry space, pivots normalized to 1.
    uint32_t rows[4][4];
    int pivot[4];
    int dim = 0;

    auto insert = [&](uint32_t v0, uint32_t v1, uint32_t v2, uint32_t v3) -> bool {
      uint32_t v[4] = {v0, v1, v2, v3};
      for (int r = 0; r < dim; ++r) {
        uint32_t c = v[pivot[r]];
        if (c == 0) continue;
        for (int j = 0; j < 4; ++j) v[j] = sub[v[j] * q + mul[c * q + rows[r][j]]];
      }
      int p = -1;
      for (int j = 0; j < 4; ++j) {
        if (v[j] != 0) {
          p = j;
          break;
        }
      }
      if (p < 0) return false;
      if (v[p] != 1) {
        // Scan for the inverse through the multiplication row; q is tiny.
        uint32_t c = v[p], inv = 1;
        while (mul[c * q + inv] != 1) ++inv;
        for (int j = 0; j < 4; ++j) v[j] = mul[inv * q + v[j]];
      }
      rows[dim][0] = v[0];
      rows[dim][1] = v[1];
      rows[dim][2] = v[2];
      rows[dim][3] = v[3];
      pivot[dim] = p;
      ++dim;
      return true;
    };

    insert(1, 0, 0, 1);
    for (int i = 0; i < m && dim < 4; ++i) {
      const uint32_t* a = entries + 4 * i;
      insert(a[0], a[1], a[2], a[3]);
    }

    bool grew = true;
    while (grew && dim < 4) {
      grew = false;
      int d = dim;
      for (int i = 0; i < d && dim < 4; ++i) {
        for (int j = 0; j < d && dim < 4; ++j) {
          const uint32_t* a = rows[i];
          const uint32_t* b = rows[j];
          bool in = insert(add[mul[a[0] * q + b[0]] * q + mul[a[1] * q + b[2]]],
                           add[mul[a[0] * q + b[1]] * q + mul[a[1] * q + b[3]]],
                           add[mul[a[2] * q + b[0]] * q + mul[a[3] * q + b[2]]],
                           add[mul[a[2] * q + b[1]] * q + mul[a[3] * q + b[3]]]);
          grew = grew || in;
        }
      }
    }

    if (dim == 1) return Stratum::Sc;
    if (dim == 3) return Stratum::Borel;
    if (dim == 4) return Stratum::Air;

    // Dimension 2: find a non-scalar basis row and test its discriminant.
    for (int r = 0; r < 2; ++r) {
      const uint32_t* b = rows[r];
      if (b[1] == 0 && b[2] == 0 && b[0] == b[3]) continue;
      uint32_t tr = add[b[0] * q + b[3]];
      uint32_t det = sub[mul[b[0] * q + b[3]] * q + mul[b[1] * q + b[2]]];
      uint32_t disc = sub[mul[tr * q + tr] * q + mul[four * q + det]];
      return disc == 0 ? Stratum::U : Stratum::Ss;
    }
    return Stratum::Sc;  // unreachable: a 2-dim algebra has a non-scalar row
  }
};

}  // namespace repvar2
