#include "orbchar/selftest.hpp"

#include <random>
#include <vector>

#include "orbchar/euler_calculus.hpp"
#include "orbchar/euler_ring.hpp"
#include "orbchar/group_catalog.hpp"
#include "orbchar/groupoid.hpp"
#include "orbchar/homs.hpp"
#include "orbchar/lie_catalog.hpp"
#include "orbchar/presentation.hpp"

namespace orbchar {

namespace {

using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

DefinableSpace random_space(Rng& rng) {
    DefinableSpace s;
    const int strata = rand_int(rng, 1, 4);
    for (int i = 0; i < strata; ++i) {
        CellVector cells;
        const int entries = rand_int(rng, 1, 3);
        for (int e = 0; e < entries; ++e) cells[rand_int(rng, 0, 4)] += rand_int(rng, 0, 3);
        s.strata.push_back({"s" + std::to_string(i), cells});
    }
    return s;
}

RingElement random_ring_element(Rng& rng, const std::vector<GroupAtom>& pool) {
    RingElement r(rand_int(rng, -3, 3));
    const int terms = rand_int(rng, 0, 3);
    for (int t = 0; t < terms; ++t) {
        std::vector<GroupAtom> atoms;
        const int len = rand_int(rng, 1, 3);
        for (int a = 0; a < len; ++a) atoms.push_back(pool[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<int>(pool.size()) - 1))]);
        r += RingElement::monomial(normalize_monomial(atoms), rand_int(rng, -3, 3));
    }
    return r;
}

GroupoidModel random_model(Rng& rng, const std::vector<LieGroupDescriptor>& pool) {
    GroupoidModel m;
    const int strata = rand_int(rng, 1, 4);
    for (int i = 0; i < strata; ++i) {
        GroupoidStratum s;
        s.label = "s" + std::to_string(i);
        const int entries = rand_int(rng, 1, 2);
        for (int e = 0; e < entries; ++e) s.cells[rand_int(rng, 0, 3)] += rand_int(rng, 0, 2);
        s.isotropy = pool[static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(pool.size()) - 1))];
        m.strata.push_back(std::move(s));
    }
    return m;
}

std::int64_t burnside_orbit_count(const HomSet& hs) {
    if (hs.homs.empty()) return 0;
    const FiniteGroup& g = hs.group;
    std::int64_t fixed_total = 0;
    for (int c = 0; c < g.order(); ++c)
        for (const auto& hom : hs.homs) {
            bool fixed = true;
            for (int image : hom)
                if (g.conj(c, image) != image) {
                    fixed = false;
                    break;
                }
            if (fixed) ++fixed_total;
        }
    return fixed_total / g.order();
}

struct Failure {
    std::string detail;
};

} // namespace

int run_selftest(std::uint64_t seed, const std::string& fault, std::ostream& out) {
    if (!fault.empty() && fault != "chi-sign") {
        out << "selftest: unknown fault '" << fault << "' (known: chi-sign)\n";
        return 2;
    }
    const bool flip = fault == "chi-sign";
    out << "selftest seed " << seed << (flip ? " (fault: chi-sign)\n" : "\n");

    std::string failed_property;
    std::string failed_detail;
    const auto property = [&](const std::string& name, auto&& body) {
        if (!failed_property.empty()) return;
        try {
            const int checks = body();
            out << "property " << name << ": " << checks << " checks passed\n";
        } catch (const Failure& f) {
            failed_property = name;
            failed_detail = f.detail;
        }
    };

    // chi sums (-1)^dim over cells; the injected fault drops the sign, which
    // the additivity cross-check below must catch.
    const auto chi_local = [flip](const DefinableSpace& s) {
        std::int64_t acc = 0;
        for (const auto& st : s.strata)
            for (const auto& [dim, count] : st.cells)
                acc += (dim % 2 == 0 || flip) ? count : -count;
        return acc;
    };

    property("chi-additivity", [&] {
        Rng rng(seed + 1);
        for (int t = 0; t < 200; ++t) {
            const DefinableSpace a = random_space(rng), b = random_space(rng);
            const std::int64_t lhs = chi_local(disjoint_union(a, b));
            const std::int64_t rhs = euler_char(a) + euler_char(b);
            if (lhs != rhs)
                throw Failure{"chi(A + B) = " + std::to_string(lhs) + " but chi(A) + chi(B) = " +
                              std::to_string(rhs)};
        }
        return 200;
    });

    property("chi-multiplicativity", [&] {
        Rng rng(seed + 2);
        for (int t = 0; t < 200; ++t) {
            const DefinableSpace a = random_space(rng), b = random_space(rng);
            if (euler_char(product(a, b)) != euler_char(a) * euler_char(b))
                throw Failure{"chi(A x B) != chi(A) chi(B)"};
        }
        return 200;
    });

    property("chi-open-cell", [&] {
        for (int d = 0; d <= 6; ++d) {
            const std::int64_t want = d % 2 == 0 ? 1 : -1;
            if (euler_char(open_cell(d)) != want)
                throw Failure{"open " + std::to_string(d) + "-cell has chi != (-1)^d"};
        }
        return 7;
    });

    property("hom-orbit-burnside", [&] {
        Rng rng(seed + 3);
        const auto catalog = bundled_catalog();
        const std::vector<GroupPresentation> gammas{parse_gamma("Z"), parse_gamma("Z^2"),
                                                    parse_gamma("Z/2"), parse_gamma("Z/3")};
        int checks = 0;
        for (int t = 0; t < 40; ++t) {
            const FiniteGroup& g =
                catalog[static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(catalog.size()) - 1))];
            const GroupPresentation& gamma =
                gammas[static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(gammas.size()) - 1))];
            const HomSet hs = enumerate_homs(gamma, g);
            if (conj_orbit_count(hs) != burnside_orbit_count(hs))
                throw Failure{"orbit count disagrees with the Burnside average on " + g.name()};
            ++checks;
        }
        return checks;
    });

    property("ring-axioms", [&] {
        Rng rng(seed + 4);
        std::vector<GroupAtom> pool;
        for (const char* name : {"Z/2", "Z/3", "S3"})
            pool.push_back(GroupAtom::finite_from_group(*catalog_group(name)));
        pool.push_back(GroupAtom::lie_atom(LieAtom::Torus1));
        pool.push_back(GroupAtom::lie_atom(LieAtom::SU2));
        for (int t = 0; t < 100; ++t) {
            const RingElement a = random_ring_element(rng, pool);
            const RingElement b = random_ring_element(rng, pool);
            const RingElement c = random_ring_element(rng, pool);
            if (a * b != b * a) throw Failure{"multiplication is not commutative"};
            if ((a + b) + c != a + (b + c)) throw Failure{"addition is not associative"};
            if (a * (b + c) != a * b + a * c) throw Failure{"distributivity fails"};
        }
        return 100;
    });

    property("ring-fusion-confluence", [&] {
        Rng rng(seed + 5);
        const auto catalog = bundled_catalog();
        for (int t = 0; t < 100; ++t) {
            std::vector<GroupAtom> atoms;
            const int len = rand_int(rng, 2, 3);
            for (int a = 0; a < len; ++a) {
                const FiniteGroup& g = catalog[static_cast<std::size_t>(
                    rand_int(rng, 0, static_cast<int>(catalog.size()) - 1))];
                if (g.order() > 1 && g.order() <= 4) atoms.push_back(GroupAtom::finite_from_group(g));
            }
            if (atoms.empty()) continue;
            std::vector<GroupAtom> reversed(atoms.rbegin(), atoms.rend());
            if (!(normalize_monomial(atoms) == normalize_monomial(reversed)))
                throw Failure{"monomial normalization depends on atom order"};
        }
        return 100;
    });

    property("gamma-universality", [&] {
        Rng rng(seed + 6);
        const std::vector<LieGroupDescriptor> pool{
            LieGroupDescriptor::finite_group(trivial_group()),
            LieGroupDescriptor::finite_group(*catalog_group("Z/2")),
            LieGroupDescriptor::finite_group(*catalog_group("S3")),
            LieGroupDescriptor::torus(1),
            LieGroupDescriptor::product({LieGroupDescriptor::finite_group(*catalog_group("Z/3")),
                                         LieGroupDescriptor::torus(1)})};
        const std::vector<GroupPresentation> gammas{parse_gamma("Z"), parse_gamma("Z/2")};
        for (int t = 0; t < 60; ++t) {
            const GroupoidModel m = random_model(rng, pool);
            for (const auto& gamma : gammas) {
                const std::int64_t direct = chi_gamma(m, gamma);
                const std::int64_t via_ring = apply_hom<std::int64_t>(
                    [&](const GroupAtom& a) { return gamma_weight_of_atom(a, gamma); }, chi_un(m));
                if (direct != via_ring)
                    throw Failure{"chi_gamma disagrees with its evaluation through chi_un"};
            }
        }
        return 60;
    });

    property("es-universality", [&] {
        Rng rng(seed + 7);
        const std::vector<LieGroupDescriptor> pool{
            LieGroupDescriptor::finite_group(*catalog_group("Z/4")),
            LieGroupDescriptor::finite_group(*catalog_group("D4")),
            LieGroupDescriptor::o2(),
            LieGroupDescriptor::su2()};
        for (int t = 0; t < 60; ++t) {
            const GroupoidModel m = random_model(rng, pool);
            const Rational direct = chi_es(m);
            const Rational via_ring = apply_hom<Rational>(
                [&](const GroupAtom& a) { return es_weight_of_atom(a); }, chi_un(m));
            if (!(direct == via_ring))
                throw Failure{"chi_es disagrees with its evaluation through chi_un"};
        }
        return 60;
    });

    if (!failed_property.empty()) {
        out << "selftest FAILED at property '" << failed_property << "': " << failed_detail << "\n";
        return 1;
    }
    out << "selftest: all properties passed\n";
    return 0;
}

} // namespace orbchar
