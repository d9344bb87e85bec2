#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbchar/group.hpp"

namespace orbchar {

// Table builders for the standard small families.
FiniteGroup cyclic_group(int n);                    // Z/n
FiniteGroup dihedral_group(int n);                  // D_n, order 2n (D1 = Z/2)
FiniteGroup dicyclic_group(int n);                  // Dic_n, order 4n (Dic2 = Q8)
FiniteGroup symmetric_group(int n);                 // S_n, n <= 5
FiniteGroup alternating_group(int n);               // A_n, n <= 5

// Every isomorphism class of order <= 12 (24 classes), each with its
// canonical display name.  Order of the list is deterministic:
// ascending group order, abelian classes first within an order.
const std::vector<FiniteGroup>& bundled_catalog();

// Catalog lookup by display name ("Z/6", "S3", "Z/2 x Z/2", ...).
std::optional<FiniteGroup> catalog_group(const std::string& name);

} // namespace orbchar
