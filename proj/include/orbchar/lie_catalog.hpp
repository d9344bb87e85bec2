#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbchar/euler_calculus.hpp"
#include "orbchar/euler_ring.hpp"
#include "orbchar/group.hpp"
#include "orbchar/presentation.hpp"
#include "orbchar/rational.hpp"

namespace orbchar {

struct UnsupportedGroupError : std::runtime_error {
    explicit UnsupportedGroupError(const std::string& what) : std::runtime_error(what) {}
};

// Compact-group descriptor over the fixed catalog: finite groups, tori,
// SU(2), SO(3), O(2), and finite products of these.  Normal form: products
// are flattened and sorted, finite factors are merged into one table, torus
// factors into one rank, and singleton products collapse.
struct LieGroupDescriptor {
    enum class Kind { Finite, Torus, SU2, SO3, O2, Product };
    Kind kind = Kind::Finite;
    FiniteGroup finite;                        // Kind::Finite
    int rank = 0;                              // Kind::Torus
    std::vector<LieGroupDescriptor> factors;   // Kind::Product

    static LieGroupDescriptor finite_group(FiniteGroup g);
    static LieGroupDescriptor torus(int n);
    static LieGroupDescriptor su2();
    static LieGroupDescriptor so3();
    static LieGroupDescriptor o2();
    static LieGroupDescriptor product(std::vector<LieGroupDescriptor> factors);

    bool is_trivial() const { return kind == Kind::Finite && finite.order() == 1; }
};

// "T^n", "SU2", "SO3", "O2", "finite:<catalog name>", "prod(a,b,...)";
// bare catalog names like "Z/5" or "S3" are accepted as finite shorthand.
LieGroupDescriptor parse_descriptor(const std::string& text);
std::string descriptor_to_string(const LieGroupDescriptor& d);

// Component group G / G0.
FiniteGroup component_group(const LieGroupDescriptor& d);

// One entry per conjugacy class of the component group: the cell model of
// that slice of the conjugation quotient, with the Cartan-subgroup shape
// (torus rank, cyclic part, Weyl order) it was derived from.
struct CartanDatum {
    std::string component_class;
    int torus_rank = 0;
    std::int64_t cyclic_part = 1;
    std::int64_t weyl_order = 1;
    CellVector class_space_cells;
};

std::vector<CartanDatum> cartan_data(const LieGroupDescriptor& d);

// Conjugation quotient Ad_G\G as a definable space: disjoint union of the
// per-component-class cell models.
DefinableSpace conj_class_space(const LieGroupDescriptor& d);

// chi(Ad_G\G).
std::int64_t chi_ad(const LieGroupDescriptor& d);

// Ring-atom decomposition of the symbol T[G]: finite part canonicalized via
// the registry, T^n split into n circle atoms, products concatenated.
std::vector<GroupAtom> descriptor_atoms(const LieGroupDescriptor& d,
                                        int iso_cap = GroupRegistry::kDefaultIsoCap);

// chi( G \ Hom(Gamma, G) ), the weight of the Gamma-Euler characteristic.
// Supported: finite groups with any Gamma; tori with any Gamma (through the
// abelianization); SU2/SO3/O2 (and products) only with Gamma = Z.
// Throws UnsupportedGroupError otherwise.
std::int64_t gamma_weight(const LieGroupDescriptor& d, const GroupPresentation& gamma);

// 1 / #components(G), the Euler-Satake weight.
Rational es_weight(const LieGroupDescriptor& d);

// 1 / #components(Hom(Gamma, G)); same support matrix as gamma_weight.
// For finite G the hom space is discrete, so #components = #homs.
Rational gamma_es_weight(const LieGroupDescriptor& d, const GroupPresentation& gamma);

} // namespace orbchar
