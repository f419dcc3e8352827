#pragma once

#include <string>

namespace repvar2 {

// Stratum of a matrix tuple by the dimension h of the unital subalgebra its
// entries generate: h = 1 scalar, h = 2 semisimple or unipotent (split by
// the discriminant of any non-scalar algebra element), h = 3 Borel,
// h = 4 absolutely irreducible.
enum class Stratum { Sc, Ss, U, Borel, Air };

inline constexpr Stratum kAllStrata[] = {Stratum::Sc, Stratum::Ss, Stratum::U,
                                         Stratum::Borel, Stratum::Air};

const char* stratum_name(Stratum s);            // "sc", "ss", "u", "borel", "air"
Stratum stratum_from_name(const std::string&);  // throws std::invalid_argument

}  // namespace repvar2
