#pragma once

#include <optional>
#include <deque>
#include <shared_mutex>
#include <string>

#include "orbchar/group.hpp"

namespace orbchar {

// Canonicalization registry for finite-group symbols: isomorphic groups get
// the same id (and hence the same display label).  Pre-seeded with every
// isomorphism class of order <= 12 so small atoms always render with their
// standard names.  Concurrent reads, synchronized insertion.
//
// Groups larger than the isomorphism cap cannot be canonicalized by search;
// they are matched by (order, name) only, so differently named copies of the
// same large group are distinct atoms.  Documented limitation.
class GroupRegistry {
public:
    static GroupRegistry& instance();

    // id of the isomorphism class of g, registering it if new.
    // The trivial group returns -1 (it is the empty monomial, never an atom).
    int canonical_id(const FiniteGroup& g, int iso_cap = kDefaultIsoCap);

    std::optional<int> find_by_label(const std::string& label) const;

    const FiniteGroup& representative(int id) const;
    const std::string& label(int id) const;
    int order(int id) const;

    static constexpr int kDefaultIsoCap = 64;

private:
    GroupRegistry();

    mutable std::shared_mutex mu_;
    std::deque<FiniteGroup> reps_;   // deque: stable references under append
    std::deque<std::string> labels_;
};

} // namespace orbchar
