#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbchar {

struct PresentationError : std::runtime_error {
    explicit PresentationError(const std::string& what) : std::runtime_error(what) {}
};

// Finitely presented source group: k generators, relators as words in
// signed 1-based generator indices (+i = generator i, -i = its inverse).
// A generator-free presentation is normalized to the trivial group
// <a | a>, so k >= 1 always holds.
struct GroupPresentation {
    int generators = 1;
    std::vector<std::vector<int>> relators;

    static GroupPresentation make(int generators, std::vector<std::vector<int>> relators);

    // Free group of rank k (k >= 1).
    static GroupPresentation free_group(int k);
    // Z^k: pairwise commutators.
    static GroupPresentation free_abelian(int k);
    // Z/n: one generator, relator a^n.
    static GroupPresentation cyclic(int n);

    // Exponent-sum matrix, one row per relator, used for abelianization.
    std::vector<std::vector<std::int64_t>> relator_exponents() const;
};

// Shorthand accepted by the CLI: "Z", "Z^k", "Z/n".
GroupPresentation parse_gamma(const std::string& text);

// Structural test for the shape <a | > (one generator, no relators), the
// only presentation for which Hom into nonabelian Lie groups is supported.
bool is_free_rank_one(const GroupPresentation& p);

std::string gamma_to_string(const GroupPresentation& p);

} // namespace orbchar
