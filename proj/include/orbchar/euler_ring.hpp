#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbchar/checked_int.hpp"
#include "orbchar/group.hpp"
#include "orbchar/group_registry.hpp"

namespace orbchar {

// The ring of group symbols: the free commutative ring on symbols T[G], one
// per isomorphism class of compact group, modulo T[G]*T[H] = T[GxH].  T of
// the trivial group is the constant 1 (the empty monomial).
//
// Finite atoms are registry ids; the compact Lie atoms in scope are the
// catalog's indecomposable classes below.  A rank-n torus symbol is the
// n-th power of the circle atom, so only rank one appears as an atom.

enum class LieAtom : int { Torus1 = 0, SU2 = 1, SO3 = 2, O2 = 3 };

std::string lie_atom_label(LieAtom a);

struct GroupAtom {
    enum class Kind : int { Finite = 0, Lie = 1 };
    Kind kind = Kind::Finite;
    int finite_id = -1;   // GroupRegistry id when kind == Finite
    int finite_order = 0; // cached representative order, part of the sort key
    LieAtom lie = LieAtom::Torus1;

    static GroupAtom finite(int registry_id);
    static GroupAtom finite_from_group(const FiniteGroup& g, int iso_cap = GroupRegistry::kDefaultIsoCap);
    static GroupAtom lie_atom(LieAtom a);

    std::string label() const;

    friend bool operator==(const GroupAtom& a, const GroupAtom& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == Kind::Finite) return a.finite_id == b.finite_id;
        return a.lie == b.lie;
    }
    // Finite atoms sort before Lie atoms; finite by (order, id), Lie by key.
    friend bool operator<(const GroupAtom& a, const GroupAtom& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.kind == Kind::Finite)
            return std::pair(a.finite_order, a.finite_id) < std::pair(b.finite_order, b.finite_id);
        return a.lie < b.lie;
    }
};

// Sorted multiset of atoms; the empty monomial is the ring unit.
struct Monomial {
    std::vector<GroupAtom> atoms;

    bool is_constant() const { return atoms.empty(); }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.atoms == b.atoms; }
    friend bool operator<(const Monomial& a, const Monomial& b);
};

// Canonicalizes an atom multiset: sorts, and fuses the finite atoms into a
// single registry-canonical atom via an explicit direct product whenever
// their total order stays within iso_cap.  Over the cap no fusion happens at
// all (never partial), so canonicalization is deterministic and confluent.
Monomial normalize_monomial(std::vector<GroupAtom> atoms, int iso_cap = GroupRegistry::kDefaultIsoCap);

struct AtomNotMappedError : std::runtime_error {
    explicit AtomNotMappedError(const std::string& atom)
        : std::runtime_error("ring homomorphism undefined on atom T[" + atom + "]") {}
};

// Element of the symbol ring: finitely many monomials with nonzero integer
// coefficients.  Canonical by construction; equality is structural.
class RingElement {
public:
    RingElement() = default;
    RingElement(std::int64_t constant) {
        if (constant != 0) terms_[Monomial{}] = constant;
    }
    static RingElement atom(const GroupAtom& a) {
        RingElement r;
        r.terms_[Monomial{{a}}] = 1;
        return r;
    }
    static RingElement monomial(Monomial m, std::int64_t coeff = 1) {
        RingElement r;
        if (coeff != 0) r.terms_[std::move(m)] = coeff;
        return r;
    }

    const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    RingElement operator-() const;
    RingElement& operator+=(const RingElement& b) { return *this = *this + b; }
    RingElement& operator-=(const RingElement& b) { return *this = *this - b; }

    // Product with monomial normalization at the given isomorphism cap.
    static RingElement mul(const RingElement& a, const RingElement& b,
                           int iso_cap = GroupRegistry::kDefaultIsoCap);
    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        return mul(a, b);
    }
    RingElement& operator*=(const RingElement& b) { return *this = *this * b; }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

    // Deterministic text form, e.g. "3*T[S3] + T[Z/2 x Z/2] - 2":
    // non-constant terms sorted by label, the constant term last.
    std::string to_string() const;

private:
    std::map<Monomial, std::int64_t> terms_;
};

// Evaluation of the ring homomorphism induced by r: atoms -> R.  R needs
// construction from std::int64_t plus + and *; the empty product is R(1).
// r may throw AtomNotMappedError for atoms outside its domain.
template <class R, class F>
R apply_hom(F&& r, const RingElement& x) {
    R acc = R(0);
    for (const auto& [mono, coeff] : x.terms()) {
        R prod = R(1);
        for (const auto& a : mono.atoms) prod = prod * r(a);
        acc = acc + R(coeff) * prod;
    }
    return acc;
}

// Map-backed homomorphism table; throws AtomNotMappedError on misses.
template <class R>
struct AtomTable {
    std::map<GroupAtom, R> values;
    R operator()(const GroupAtom& a) const {
        auto it = values.find(a);
        if (it == values.end()) throw AtomNotMappedError(a.label());
        return it->second;
    }
};

} // namespace orbchar
