#pragma once

#include <cstdint>
#include <vector>

#include "orbchar/group.hpp"
#include "orbchar/presentation.hpp"

namespace orbchar {

// Enumerated Hom(Gamma, G): each entry assigns a G element to every
// generator and satisfies all relators.  Tuples are sorted and
// duplicate-free, so HomSets compare structurally.
struct HomSet {
    FiniteGroup group;
    GroupPresentation presentation;
    std::vector<std::vector<int>> homs;
};

// Evaluates a relator word at a generator assignment.
int evaluate_word(const FiniteGroup& g, const std::vector<int>& word,
                  const std::vector<int>& assignment);

// DFS over generator images; each relator is checked as soon as its last
// generator is assigned, which prunes most of the |G|^k space for
// commutator-style relators.
HomSet enumerate_homs(const GroupPresentation& gamma, const FiniteGroup& g);

// Number of orbits of G acting on the hom tuples by simultaneous
// conjugation, by explicit orbit marking.
std::int64_t conj_orbit_count(const HomSet& h);

} // namespace orbchar
