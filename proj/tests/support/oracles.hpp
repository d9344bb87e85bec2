#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "orbchar/euler_calculus.hpp"
#include "orbchar/group.hpp"
#include "orbchar/presentation.hpp"

namespace orbchar::testing {

// Exhaustive homomorphism scan: every generator-image tuple is tried and
// every relator evaluated in full, with word evaluation written from
// scratch.  Deliberately shares no search logic with the library.
std::vector<std::vector<int>> brute_force_homs(const GroupPresentation& p, const FiniteGroup& g);

// Orbit count of the conjugation action on an explicit hom list via the
// Burnside average (1/|G|) sum_g #fixed(g).
std::int64_t burnside_orbits(const FiniteGroup& g, const std::vector<std::vector<int>>& homs);

// chi re-summed directly from the cell counts.
std::int64_t naive_chi(const DefinableSpace& s);

// Deterministic random inputs for the property suites.
DefinableSpace random_space(std::mt19937_64& rng, int max_strata = 4, int max_dim = 5);

} // namespace orbchar::testing
