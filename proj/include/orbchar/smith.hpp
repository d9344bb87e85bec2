#pragma once

#include <cstdint>
#include <vector>

#include "orbchar/presentation.hpp"

namespace orbchar {

// Diagonal of the Smith normal form of an integer matrix: non-negative
// entries, each dividing the next.  Exact; overflow checked.
std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> m);

// Abelianization of a finitely presented group as Z^free_rank + sum of
// Z/torsion[i], from the Smith form of the relator exponent matrix.
struct Abelianization {
    int free_rank = 0;
    std::vector<std::int64_t> torsion;  // entries > 1, divisibility chain
};

Abelianization abelianization(const GroupPresentation& p);

} // namespace orbchar
