#include <doctest.h>

#include <algorithm>
#include <cstdint>

#include "orbchar/group_catalog.hpp"
#include "orbchar/lie_catalog.hpp"
#include "orbchar/smith.hpp"

using namespace orbchar;

namespace {

LieGroupDescriptor fin(const char* name) {
    return LieGroupDescriptor::finite_group(*catalog_group(name));
}

std::int64_t data_chi(const LieGroupDescriptor& d) {
    std::int64_t total = 0;
    for (const auto& datum : cartan_data(d)) total += euler_char(datum.class_space_cells);
    return total;
}

} // namespace

TEST_CASE("conjugation-quotient Euler characteristics match the known values") {
    CHECK(chi_ad(LieGroupDescriptor::su2()) == 1);
    CHECK(chi_ad(LieGroupDescriptor::so3()) == 1);
    CHECK(chi_ad(LieGroupDescriptor::o2()) == 2);
    for (int n = 1; n <= 4; ++n) CHECK(chi_ad(LieGroupDescriptor::torus(n)) == 0);
    // For a finite group the quotient is one point per conjugacy class.
    for (const auto& g : bundled_catalog())
        CHECK(chi_ad(LieGroupDescriptor::finite_group(g)) ==
              static_cast<std::int64_t>(conjugacy_classes(g).size()));
}

TEST_CASE("conjugation-quotient chi is multiplicative over products") {
    const auto su2 = LieGroupDescriptor::su2();
    CHECK(chi_ad(LieGroupDescriptor::product({su2, fin("S3")})) == 3);
    CHECK(chi_ad(LieGroupDescriptor::product({LieGroupDescriptor::o2(), LieGroupDescriptor::o2()})) == 4);
    CHECK(chi_ad(LieGroupDescriptor::product({LieGroupDescriptor::torus(1), fin("Z/3")})) == 0);
    CHECK(chi_ad(LieGroupDescriptor::product({su2, LieGroupDescriptor::so3(), fin("D4")})) == 5);
}

TEST_CASE("Cartan data carry one entry per component class with sane shapes") {
    const auto check_invariants = [](const LieGroupDescriptor& d) {
        const auto data = cartan_data(d);
        CHECK(data.size() == conjugacy_classes(component_group(d)).size());
        for (const auto& datum : data) {
            CHECK(datum.weyl_order >= 1);
            CHECK(datum.cyclic_part >= 1);
            CHECK(datum.torus_rank >= 0);
        }
        CHECK(data_chi(d) == chi_ad(d));
        CHECK(euler_char(conj_class_space(d)) == chi_ad(d));
    };
    check_invariants(LieGroupDescriptor::su2());
    check_invariants(LieGroupDescriptor::o2());
    check_invariants(LieGroupDescriptor::torus(2));
    check_invariants(fin("D4"));
    check_invariants(fin("Q8"));
    check_invariants(LieGroupDescriptor::product({LieGroupDescriptor::su2(), fin("S3")}));
}

TEST_CASE("Cartan data for specific groups") {
    SUBCASE("cyclic Z/5: five point classes, identity sees the full group") {
        const auto data = cartan_data(fin("Z/5"));
        REQUIRE(data.size() == 5);
        for (const auto& datum : data) {
            CHECK(datum.torus_rank == 0);
            CHECK(euler_char(datum.class_space_cells) == 1);
        }
        // Identity class: <e> is trivial, normalizer is all of Z/5.
        const auto id = std::find_if(data.begin(), data.end(),
                                     [](const CartanDatum& c) { return c.cyclic_part == 1; });
        REQUIRE(id != data.end());
        CHECK(id->weyl_order == 5);
        // Any generator class: <r> = Z/5 is the whole (abelian) group.
        const auto gen = std::find_if(data.begin(), data.end(),
                                      [](const CartanDatum& c) { return c.cyclic_part == 5; });
        REQUIRE(gen != data.end());
        CHECK(gen->weyl_order == 1);
    }
    SUBCASE("dihedral D4: the order-4 rotation class has Weyl order 2") {
        const auto data = cartan_data(fin("D4"));
        REQUIRE(data.size() == 5);
        const auto rot = std::find_if(data.begin(), data.end(),
                                      [](const CartanDatum& c) { return c.cyclic_part == 4; });
        REQUIRE(rot != data.end());
        CHECK(rot->weyl_order == 2);
    }
    SUBCASE("SU2: one class, rank-1 interval quotient") {
        const auto data = cartan_data(LieGroupDescriptor::su2());
        REQUIRE(data.size() == 1);
        CHECK(data[0].torus_rank == 1);
        CHECK(data[0].weyl_order == 2);
        CHECK(euler_char(data[0].class_space_cells) == 1);
    }
    SUBCASE("O2: rotation interval plus a reflection point") {
        const auto data = cartan_data(LieGroupDescriptor::o2());
        REQUIRE(data.size() == 2);
        const auto rot = std::find_if(data.begin(), data.end(),
                                      [](const CartanDatum& c) { return c.torus_rank == 1; });
        const auto ref = std::find_if(data.begin(), data.end(),
                                      [](const CartanDatum& c) { return c.torus_rank == 0; });
        REQUIRE(rot != data.end());
        REQUIRE(ref != data.end());
        CHECK(euler_char(rot->class_space_cells) == 1);
        CHECK(ref->cyclic_part == 2);
        CHECK(ref->weyl_order == 2);
        CHECK(euler_char(ref->class_space_cells) == 1);
    }
    SUBCASE("torus: single free class, Weyl trivial, chi zero") {
        const auto data = cartan_data(LieGroupDescriptor::torus(3));
        REQUIRE(data.size() == 1);
        CHECK(data[0].torus_rank == 3);
        CHECK(data[0].weyl_order == 1);
        CHECK(euler_char(data[0].class_space_cells) == 0);
    }
}

TEST_CASE("descriptor parsing and printing round-trip") {
    CHECK(descriptor_to_string(parse_descriptor("SU2")) == "SU2");
    CHECK(descriptor_to_string(parse_descriptor("SO3")) == "SO3");
    CHECK(descriptor_to_string(parse_descriptor("O2")) == "O2");
    CHECK(descriptor_to_string(parse_descriptor("T^2")) == "T^2");
    CHECK(descriptor_to_string(parse_descriptor("finite:S3")) == "finite:S3");
    CHECK(descriptor_to_string(parse_descriptor("S3")) == "finite:S3");

    // Printing then reparsing is stable on composite descriptors.
    for (const char* text : {"prod(SU2,Z/2)", "prod(T^2,O2,S3)", "prod(prod(SU2,SU2),T^1)"}) {
        const auto once = descriptor_to_string(parse_descriptor(text));
        CHECK(descriptor_to_string(parse_descriptor(once)) == once);
    }

    CHECK(parse_descriptor("T^3").rank == 3);
    CHECK(parse_descriptor("prod(SU2,SU2)").kind == LieGroupDescriptor::Kind::Product);
    // Singleton and trivial-factor products collapse.
    CHECK(parse_descriptor("prod(SU2)").kind == LieGroupDescriptor::Kind::SU2);
    CHECK(parse_descriptor("prod(SU2,Z/1)").kind == LieGroupDescriptor::Kind::SU2);

    CHECK_THROWS_AS(parse_descriptor("E8"), UnsupportedGroupError);
    CHECK_THROWS_AS(parse_descriptor("T^0"), UnsupportedGroupError);
    CHECK_THROWS_AS(parse_descriptor("T^17"), UnsupportedGroupError);
    CHECK_THROWS_AS(parse_descriptor("prod("), UnsupportedGroupError);
    CHECK_THROWS_AS(parse_descriptor(""), UnsupportedGroupError);
}

TEST_CASE("component groups") {
    CHECK(is_isomorphic(component_group(LieGroupDescriptor::o2()), cyclic_group(2)));
    CHECK(component_group(LieGroupDescriptor::su2()).order() == 1);
    CHECK(component_group(LieGroupDescriptor::torus(4)).order() == 1);
    CHECK(component_group(fin("S3")).order() == 6);
    const auto o2xo2 =
        LieGroupDescriptor::product({LieGroupDescriptor::o2(), LieGroupDescriptor::o2()});
    CHECK(is_isomorphic(component_group(o2xo2), direct_product(cyclic_group(2), cyclic_group(2))));
}

TEST_CASE("descriptor atoms decompose into ring symbols") {
    const auto t2 = descriptor_atoms(parse_descriptor("T^2"));
    REQUIRE(t2.size() == 2);
    CHECK(t2[0].kind == GroupAtom::Kind::Lie);
    CHECK(t2[0].lie == LieAtom::Torus1);
    CHECK(t2[1].lie == LieAtom::Torus1);

    const auto mixed = descriptor_atoms(parse_descriptor("prod(SU2,Z/2)"));
    REQUIRE(mixed.size() == 2);
    CHECK(mixed[0].kind == GroupAtom::Kind::Finite);
    CHECK(mixed[1].kind == GroupAtom::Kind::Lie);
    CHECK(mixed[1].lie == LieAtom::SU2);

    CHECK(descriptor_atoms(fin("Z/1")).empty());
}

TEST_CASE("Smith diagonal and abelianization") {
    // Returns the nonzero invariant factors as a divisibility chain.
    CHECK(smith_diagonal({{2, 0}, {0, 3}}) == std::vector<std::int64_t>{1, 6});
    CHECK(smith_diagonal({{1, 0}, {0, 1}}) == std::vector<std::int64_t>{1, 1});
    CHECK(smith_diagonal({{6, 0}, {0, 4}}) == std::vector<std::int64_t>{2, 12});
    // Rank-one matrix: the second factor is zero and is dropped.
    CHECK(smith_diagonal({{4, 6}, {6, 9}}) == std::vector<std::int64_t>{1});
    CHECK(smith_diagonal({{0, 0}, {0, 0}}).empty());

    const auto zn = abelianization(GroupPresentation::cyclic(6));
    CHECK(zn.free_rank == 0);
    CHECK(zn.torsion == std::vector<std::int64_t>{6});

    const auto z2 = abelianization(GroupPresentation::free_abelian(2));
    CHECK(z2.free_rank == 2);
    CHECK(z2.torsion.empty());

    const auto f3 = abelianization(GroupPresentation::free_group(3));
    CHECK(f3.free_rank == 3);

    // <a,b | a^2, b^2, (ab)^2> abelianizes to Z/2 x Z/2.
    GroupPresentation dihedral;
    dihedral.generators = 2;
    dihedral.relators = {{1, 1}, {2, 2}, {1, 2, 1, 2}};
    const auto v4 = abelianization(dihedral);
    CHECK(v4.free_rank == 0);
    CHECK(v4.torsion == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("torus weights follow the abelianization rule") {
    const auto t1 = LieGroupDescriptor::torus(1);
    const auto t2 = LieGroupDescriptor::torus(2);
    // Free rank in Gamma^ab kills the count.
    CHECK(gamma_weight(t1, GroupPresentation::free_abelian(1)) == 0);
    CHECK(gamma_weight(t2, GroupPresentation::free_abelian(2)) == 0);
    CHECK(gamma_weight(t1, GroupPresentation::free_group(2)) == 0);
    // Pure torsion Z/k contributes k per circle factor.
    CHECK(gamma_weight(t1, GroupPresentation::cyclic(3)) == 3);
    CHECK(gamma_weight(t2, GroupPresentation::cyclic(3)) == 9);
    CHECK(gamma_es_weight(t2, GroupPresentation::cyclic(3)) == Rational(1, 9));
    // Hom(Z, T^n) is the torus itself: connected, so one component.
    CHECK(gamma_es_weight(t2, GroupPresentation::free_abelian(1)) == Rational(1));
}

TEST_CASE("gamma weights for the nonabelian catalog require a free rank-one group") {
    const auto z = GroupPresentation::free_abelian(1);
    CHECK(gamma_weight(LieGroupDescriptor::su2(), z) == 1);
    CHECK(gamma_weight(LieGroupDescriptor::so3(), z) == 1);
    CHECK(gamma_weight(LieGroupDescriptor::o2(), z) == 2);
    CHECK(gamma_weight(LieGroupDescriptor::product({LieGroupDescriptor::su2(), fin("S3")}), z) == 3);

    CHECK_THROWS_AS(gamma_weight(LieGroupDescriptor::su2(), GroupPresentation::cyclic(2)),
                    UnsupportedGroupError);
    CHECK_THROWS_AS(gamma_weight(LieGroupDescriptor::o2(), GroupPresentation::free_abelian(2)),
                    UnsupportedGroupError);
    CHECK_THROWS_AS(gamma_es_weight(LieGroupDescriptor::so3(), GroupPresentation::cyclic(3)),
                    UnsupportedGroupError);
}

TEST_CASE("gamma weights for finite groups count hom orbits") {
    const auto s3 = fin("S3");
    CHECK(gamma_weight(s3, GroupPresentation::free_abelian(1)) == 3);
    CHECK(gamma_weight(s3, GroupPresentation::free_abelian(2)) == 8);
    CHECK(gamma_weight(s3, GroupPresentation::cyclic(2)) == 2);
    // Hom(Z/2, S3) has 4 points: identity plus three conjugate involutions.
    CHECK(gamma_es_weight(s3, GroupPresentation::cyclic(2)) == Rational(1, 4));
}

TEST_CASE("Euler-Satake weights invert the component count") {
    CHECK(es_weight(LieGroupDescriptor::su2()) == Rational(1));
    CHECK(es_weight(LieGroupDescriptor::torus(3)) == Rational(1));
    CHECK(es_weight(LieGroupDescriptor::o2()) == Rational(1, 2));
    CHECK(es_weight(fin("S3")) == Rational(1, 6));
    CHECK(es_weight(LieGroupDescriptor::product({LieGroupDescriptor::o2(), fin("S3")})) ==
          Rational(1, 12));
}
