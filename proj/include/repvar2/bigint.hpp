#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace repvar2 {

// Arbitrary-precision integers for the symbolic side (Laurent coefficients,
// formula evaluation). The census side sticks to 64-bit counters, counts
// there are capped by the tuple budget.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace repvar2
