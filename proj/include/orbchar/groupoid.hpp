#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbchar/euler_calculus.hpp"
#include "orbchar/euler_ring.hpp"
#include "orbchar/lie_catalog.hpp"
#include "orbchar/presentation.hpp"
#include "orbchar/rational.hpp"

namespace orbchar {

struct GroupoidValidationError : std::runtime_error {
    explicit GroupoidValidationError(const std::string& what) : std::runtime_error(what) {}
};

// One orbit-type stratum of an orbit space: a definable cell model of the
// stratum together with the isotropy group attached to all of its points.
struct GroupoidStratum {
    std::string label;
    CellVector cells;
    LieGroupDescriptor isotropy;
};

// Orbit space presented by its orbit-type stratification.  All invariants
// are sums of per-stratum terms weighted by functions of the isotropy group
// alone; which weight is used decides which invariant comes out.
struct GroupoidModel {
    std::vector<GroupoidStratum> strata;
};

// Duplicate labels, bad cell vectors.
void validate_model(const GroupoidModel& m);

// Underlying definable space (forgets isotropy).
DefinableSpace underlying_space(const GroupoidModel& m);

// Universal Euler characteristic: sum over strata of chi(stratum) * T[G_x]
// in the group-symbol ring.  Trivial isotropy contributes to the constant
// term.  Every other invariant below factors through this one.
RingElement chi_un(const GroupoidModel& m, int iso_cap = GroupRegistry::kDefaultIsoCap);

// Gamma-Euler characteristic: per-stratum weight chi( G \ Hom(Gamma, G) ).
// Gamma = Z gives the classical orbifold Euler characteristic.
std::int64_t chi_gamma(const GroupoidModel& m, const GroupPresentation& gamma);

// Euler-Satake characteristic: weight 1 / #components(G).
Rational chi_es(const GroupoidModel& m);

// Gamma-Euler-Satake: weight 1 / #components(Hom(Gamma, G)).
Rational chi_gamma_es(const GroupoidModel& m, const GroupPresentation& gamma);

// Ring-morphism views of the scalar invariants, for evaluating them through
// chi_un instead of stratum-by-stratum (the universality route).
std::int64_t gamma_weight_of_atom(const GroupAtom& atom, const GroupPresentation& gamma);
Rational es_weight_of_atom(const GroupAtom& atom);

// Full sub-groupoid over a subset of strata; unknown labels throw.
GroupoidModel restrict(const GroupoidModel& m, const std::vector<std::string>& labels);

// Product groupoid: strata are pairwise products, isotropy the product group.
GroupoidModel product(const GroupoidModel& a, const GroupoidModel& b);

} // namespace orbchar
