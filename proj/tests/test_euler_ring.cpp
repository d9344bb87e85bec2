#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "orbchar/euler_ring.hpp"
#include "orbchar/group.hpp"
#include "orbchar/group_catalog.hpp"

using namespace orbchar;

namespace {

GroupAtom atom_of(const char* name) { return GroupAtom::finite_from_group(*catalog_group(name)); }

RingElement symbol(const char* name) { return RingElement::atom(atom_of(name)); }

// max_finite_atoms bounds the finite content per monomial so that triple
// products stay within the default fusion cap (finite orders here are <= 4,
// and 4^3 = 64). Over-cap products degrade to formal multisets by design and
// are exercised separately.
RingElement random_element(std::mt19937_64& rng, const std::vector<GroupAtom>& finite_pool,
                           const std::vector<GroupAtom>& lie_pool, int max_finite_atoms) {
    const auto pick = [&rng](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    RingElement r(pick(-4, 4));
    const int terms = pick(0, 2);
    for (int t = 0; t < terms; ++t) {
        std::vector<GroupAtom> atoms;
        const int nf = pick(0, max_finite_atoms);
        for (int a = 0; a < nf; ++a)
            atoms.push_back(
                finite_pool[static_cast<std::size_t>(pick(0, static_cast<int>(finite_pool.size()) - 1))]);
        const int nl = pick(atoms.empty() ? 1 : 0, 2);
        for (int a = 0; a < nl; ++a)
            atoms.push_back(
                lie_pool[static_cast<std::size_t>(pick(0, static_cast<int>(lie_pool.size()) - 1))]);
        r += RingElement::monomial(normalize_monomial(atoms), pick(-4, 4));
    }
    return r;
}

} // namespace

TEST_CASE("symbol multiplication realizes the product relation") {
    CHECK(symbol("Z/2") * symbol("Z/3") == symbol("Z/6"));
    // Z/2 x Z/2 is the Klein group, not Z/4.
    CHECK(symbol("Z/2") * symbol("Z/2") == symbol("Z/2 x Z/2"));
    CHECK(symbol("Z/2") * symbol("Z/2") != symbol("Z/4"));
    // T[trivial] is the ring unit.
    CHECK(RingElement(1) * symbol("S3") == symbol("S3"));
}

TEST_CASE("products fuse to the registry-canonical class regardless of shape") {
    const auto d4 = dihedral_group(4);
    const auto z2xz4 = direct_product(cyclic_group(2), cyclic_group(4));
    CHECK(RingElement::atom(GroupAtom::finite_from_group(d4)) !=
          RingElement::atom(GroupAtom::finite_from_group(z2xz4)));
    CHECK(symbol("Z/2") * symbol("Z/4") == RingElement::atom(GroupAtom::finite_from_group(z2xz4)));
}

TEST_CASE("ring axioms hold on random elements within the fusion cap") {
    std::mt19937_64 rng(303);
    const std::vector<GroupAtom> finite_pool{atom_of("Z/2"), atom_of("Z/3"), atom_of("Z/4")};
    const std::vector<GroupAtom> lie_pool{GroupAtom::lie_atom(LieAtom::Torus1),
                                          GroupAtom::lie_atom(LieAtom::SU2),
                                          GroupAtom::lie_atom(LieAtom::O2)};
    for (int t = 0; t < 300; ++t) {
        const RingElement a = random_element(rng, finite_pool, lie_pool, 1);
        const RingElement b = random_element(rng, finite_pool, lie_pool, 1);
        const RingElement c = random_element(rng, finite_pool, lie_pool, 1);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + RingElement(0) == a);
        CHECK(a * RingElement(1) == a);
        CHECK(a - a == RingElement(0));
    }
}

TEST_CASE("additive axioms hold without any cap constraint") {
    std::mt19937_64 rng(313);
    const std::vector<GroupAtom> finite_pool{atom_of("Z/2"), atom_of("S3"), atom_of("D4")};
    const std::vector<GroupAtom> lie_pool{GroupAtom::lie_atom(LieAtom::SU2)};
    for (int t = 0; t < 200; ++t) {
        const RingElement a = random_element(rng, finite_pool, lie_pool, 3);
        const RingElement b = random_element(rng, finite_pool, lie_pool, 3);
        const RingElement c = random_element(rng, finite_pool, lie_pool, 3);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a - a == RingElement(0));
        CHECK(-(-a) == a);
    }
}

TEST_CASE("monomial fusion is confluent") {
    std::mt19937_64 rng(404);
    const auto catalog = bundled_catalog();
    for (int t = 0; t < 200; ++t) {
        std::vector<GroupAtom> atoms;
        const int len = 2 + static_cast<int>(rng() % 2);
        for (int a = 0; a < len; ++a) {
            const auto& g = catalog[static_cast<std::size_t>(rng() % catalog.size())];
            if (g.order() > 1 && g.order() <= 4) atoms.push_back(GroupAtom::finite_from_group(g));
        }
        if (atoms.size() < 2) continue;
        std::vector<GroupAtom> shuffled = atoms;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(normalize_monomial(atoms) == normalize_monomial(shuffled));

        // Fusing through explicit group products pairwise, in either
        // association order, lands on the same canonical atom.
        FiniteGroup left = GroupRegistry::instance().representative(atoms[0].finite_id);
        for (std::size_t i = 1; i < atoms.size(); ++i)
            left = direct_product(left, GroupRegistry::instance().representative(atoms[i].finite_id));
        FiniteGroup right = GroupRegistry::instance().representative(atoms.back().finite_id);
        for (std::size_t i = atoms.size() - 1; i-- > 0;)
            right = direct_product(GroupRegistry::instance().representative(atoms[i].finite_id), right);
        CHECK(RingElement::atom(GroupAtom::finite_from_group(left)) ==
              RingElement::atom(GroupAtom::finite_from_group(right)));
        CHECK(RingElement::monomial(normalize_monomial(atoms)) ==
              RingElement::atom(GroupAtom::finite_from_group(left)));
    }
}

TEST_CASE("monomials beyond the cap stay unfused multisets") {
    const RingElement capped = RingElement::mul(symbol("Z/4"), symbol("Z/2"), 4);
    REQUIRE(capped.terms().size() == 1);
    CHECK(capped.terms().begin()->first.atoms.size() == 2);
    // The same product under the default cap fuses to one atom.
    CHECK((symbol("Z/4") * symbol("Z/2")).terms().begin()->first.atoms.size() == 1);
}

TEST_CASE("rendering is deterministic and readable") {
    const RingElement r = RingElement(3) * symbol("S3") + symbol("Z/2 x Z/2") - RingElement(2);
    CHECK(r.to_string() == "3*T[S3] + T[Z/2 x Z/2] - 2");

    CHECK((symbol("Z/5") + RingElement(1)).to_string() == "T[Z/5] + 1");
    CHECK((RingElement(0) - symbol("Z/2")).to_string() == "-T[Z/2]");
    CHECK(RingElement(0).to_string() == "0");

    const RingElement cube = RingElement::mul(RingElement::mul(symbol("Z/2"), symbol("Z/2"), 1),
                                              symbol("Z/2"), 1);
    CHECK(cube.to_string() == "T[Z/2]^3");

    const RingElement mixed = symbol("Z/2") * RingElement::atom(GroupAtom::lie_atom(LieAtom::SU2));
    CHECK(mixed.to_string() == "T[Z/2]*T[SU2]");
}

TEST_CASE("ring homomorphisms evaluate through apply_hom") {
    // Count conjugacy classes: S3 -> 3, so T[S3] + 2 -> 5.
    const auto class_count = [](const GroupAtom& a) -> std::int64_t {
        return static_cast<std::int64_t>(
            conjugacy_classes(GroupRegistry::instance().representative(a.finite_id)).size());
    };
    CHECK(apply_hom<std::int64_t>(class_count, symbol("S3") + RingElement(2)) == 5);

    AtomTable<std::int64_t> table;
    table.values[atom_of("Z/2")] = 7;
    CHECK(apply_hom<std::int64_t>(table, symbol("Z/2") * RingElement(2)) == 14);
    CHECK_THROWS_AS(apply_hom<std::int64_t>(table, symbol("Z/3")), AtomNotMappedError);
}
