#include "orbchar/lie_catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "orbchar/checked_int.hpp"

#include "orbchar/group_catalog.hpp"
#include "orbchar/homs.hpp"
#include "orbchar/smith.hpp"

namespace orbchar {

LieGroupDescriptor LieGroupDescriptor::finite_group(FiniteGroup g) {
    LieGroupDescriptor d;
    d.kind = Kind::Finite;
    d.finite = std::move(g);
    return d;
}

LieGroupDescriptor LieGroupDescriptor::torus(int n) {
    if (n < 1) throw UnsupportedGroupError("torus rank must be >= 1");
    LieGroupDescriptor d;
    d.kind = Kind::Torus;
    d.rank = n;
    return d;
}

LieGroupDescriptor LieGroupDescriptor::su2() {
    LieGroupDescriptor d;
    d.kind = Kind::SU2;
    return d;
}

LieGroupDescriptor LieGroupDescriptor::so3() {
    LieGroupDescriptor d;
    d.kind = Kind::SO3;
    return d;
}

LieGroupDescriptor LieGroupDescriptor::o2() {
    LieGroupDescriptor d;
    d.kind = Kind::O2;
    return d;
}

LieGroupDescriptor LieGroupDescriptor::product(std::vector<LieGroupDescriptor> factors) {
    // Flatten nested products, merge finite factors into one table and torus
    // factors into one rank, drop trivial factors, sort by kind.
    std::vector<LieGroupDescriptor> flat;
    std::vector<LieGroupDescriptor> queue = std::move(factors);
    while (!queue.empty()) {
        LieGroupDescriptor d = std::move(queue.back());
        queue.pop_back();
        if (d.kind == Kind::Product) {
            for (auto& f : d.factors) queue.push_back(std::move(f));
        } else {
            flat.push_back(std::move(d));
        }
    }
    std::reverse(flat.begin(), flat.end());  // keep the caller's factor order

    FiniteGroup merged_finite = trivial_group();
    bool have_finite = false;
    int torus_rank = 0;
    std::vector<LieGroupDescriptor> rest;
    for (auto& d : flat) {
        switch (d.kind) {
            case Kind::Finite:
                if (d.finite.order() > 1) {
                    merged_finite = have_finite ? direct_product(merged_finite, d.finite) : d.finite;
                    have_finite = true;
                }
                break;
            case Kind::Torus: torus_rank += d.rank; break;
            default: rest.push_back(std::move(d)); break;
        }
    }
    std::stable_sort(rest.begin(), rest.end(),
                     [](const LieGroupDescriptor& a, const LieGroupDescriptor& b) {
                         return static_cast<int>(a.kind) < static_cast<int>(b.kind);
                     });

    std::vector<LieGroupDescriptor> out;
    if (have_finite) out.push_back(finite_group(std::move(merged_finite)));
    if (torus_rank > 0) out.push_back(torus(torus_rank));
    for (auto& d : rest) out.push_back(std::move(d));

    if (out.empty()) return finite_group(trivial_group());
    if (out.size() == 1) return std::move(out[0]);
    LieGroupDescriptor p;
    p.kind = Kind::Product;
    p.factors = std::move(out);
    return p;
}

namespace {

std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    std::size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

} // namespace

LieGroupDescriptor parse_descriptor(const std::string& raw) {
    const std::string text = trim(raw);
    if (text == "SU2") return LieGroupDescriptor::su2();
    if (text == "SO3") return LieGroupDescriptor::so3();
    if (text == "O2") return LieGroupDescriptor::o2();
    if (text.rfind("T^", 0) == 0) {
        char* end = nullptr;
        long n = std::strtol(text.c_str() + 2, &end, 10);
        if (end && *end == '\0' && n >= 1 && n <= 16)
            return LieGroupDescriptor::torus(static_cast<int>(n));
        throw UnsupportedGroupError("bad torus descriptor '" + text + "' (want T^n, 1 <= n <= 16)");
    }
    if (text.rfind("prod(", 0) == 0 && text.back() == ')') {
        std::string inner = text.substr(5, text.size() - 6);
        std::vector<LieGroupDescriptor> factors;
        for (const auto& part : split_top_level(inner)) factors.push_back(parse_descriptor(part));
        return LieGroupDescriptor::product(std::move(factors));
    }
    std::string name = text.rfind("finite:", 0) == 0 ? text.substr(7) : text;
    if (auto g = catalog_group(name)) return LieGroupDescriptor::finite_group(std::move(*g));
    throw UnsupportedGroupError("group descriptor '" + raw +
                                "' is outside the catalog (T^n, SU2, SO3, O2, finite:<name>, prod(...))");
}

std::string descriptor_to_string(const LieGroupDescriptor& d) {
    switch (d.kind) {
        case LieGroupDescriptor::Kind::Finite:
            return "finite:" + (d.finite.name().empty()
                                    ? "ord" + std::to_string(d.finite.order())
                                    : d.finite.name());
        case LieGroupDescriptor::Kind::Torus: return "T^" + std::to_string(d.rank);
        case LieGroupDescriptor::Kind::SU2: return "SU2";
        case LieGroupDescriptor::Kind::SO3: return "SO3";
        case LieGroupDescriptor::Kind::O2: return "O2";
        case LieGroupDescriptor::Kind::Product: {
            std::string s = "prod(";
            for (std::size_t i = 0; i < d.factors.size(); ++i) {
                if (i) s += ",";
                s += descriptor_to_string(d.factors[i]);
            }
            return s + ")";
        }
    }
    return "?";
}

FiniteGroup component_group(const LieGroupDescriptor& d) {
    switch (d.kind) {
        case LieGroupDescriptor::Kind::Finite: return d.finite;
        case LieGroupDescriptor::Kind::Torus:
        case LieGroupDescriptor::Kind::SU2:
        case LieGroupDescriptor::Kind::SO3: return trivial_group();
        case LieGroupDescriptor::Kind::O2: return cyclic_group(2);
        case LieGroupDescriptor::Kind::Product: {
            FiniteGroup c = trivial_group();
            for (const auto& f : d.factors) {
                FiniteGroup fc = component_group(f);
                if (fc.order() == 1) continue;
                c = c.order() == 1 ? fc : direct_product(c, fc);
            }
            return c;
        }
    }
    return trivial_group();
}

namespace {

CellVector interval_model() { return interval_cells(); }

std::vector<CartanDatum> finite_cartan_data(const FiniteGroup& f) {
    std::vector<CartanDatum> data;
    for (const auto& cls : conjugacy_classes(f)) {
        const int rep = cls[0];
        // S = <rep>; Weyl group is N(S)/S.
        std::set<int> s;
        int x = rep;
        while (s.insert(x).second) x = f.mul(x, rep);
        int norm = 0;
        for (int g = 0; g < f.order(); ++g) {
            bool keeps = true;
            for (int e : s)
                if (!s.count(f.conj(g, e))) {
                    keeps = false;
                    break;
                }
            if (keeps) ++norm;
        }
        CartanDatum d;
        d.component_class = "[" + std::to_string(rep) + "]";
        d.torus_rank = 0;
        d.cyclic_part = f.element_order(rep);
        d.weyl_order = norm / static_cast<int>(s.size());
        d.class_space_cells = point_cells();
        data.push_back(std::move(d));
    }
    return data;
}

} // namespace

std::vector<CartanDatum> cartan_data(const LieGroupDescriptor& d) {
    using Kind = LieGroupDescriptor::Kind;
    switch (d.kind) {
        case Kind::Finite: return finite_cartan_data(d.finite);
        case Kind::Torus: {
            CartanDatum c;
            c.component_class = "[1]";
            c.torus_rank = d.rank;
            c.cyclic_part = 1;
            c.weyl_order = 1;
            c.class_space_cells = circle_cells();
            for (int i = 1; i < d.rank; ++i)
                c.class_space_cells = cell_product(c.class_space_cells, circle_cells());
            return {c};
        }
        case Kind::SU2:
        case Kind::SO3: {
            // W = Z/2 acting on the maximal circle by inversion; the
            // quotient is a closed interval.
            CartanDatum c;
            c.component_class = "[1]";
            c.torus_rank = 1;
            c.cyclic_part = 1;
            c.weyl_order = 2;
            c.class_space_cells = interval_model();
            return {c};
        }
        case Kind::O2: {
            CartanDatum id;
            id.component_class = "[1]";
            id.torus_rank = 1;
            id.cyclic_part = 1;
            id.weyl_order = 2;
            id.class_space_cells = interval_model();
            // Reflection component: all reflections are conjugate inside
            // O(2), the slice is a single point.  S = <one reflection>,
            // N(S) = {1, -1, s, -s}, so |W| = 2.
            CartanDatum refl;
            refl.component_class = "[refl]";
            refl.torus_rank = 0;
            refl.cyclic_part = 2;
            refl.weyl_order = 2;
            refl.class_space_cells = point_cells();
            return {id, refl};
        }
        case Kind::Product: {
            std::vector<CartanDatum> acc{CartanDatum{"", 0, 1, 1, point_cells()}};
            for (const auto& f : d.factors) {
                std::vector<CartanDatum> next;
                for (const auto& left : acc)
                    for (const auto& right : cartan_data(f)) {
                        CartanDatum c;
                        c.component_class = left.component_class.empty()
                                                ? right.component_class
                                                : left.component_class + "x" + right.component_class;
                        c.torus_rank = left.torus_rank + right.torus_rank;
                        c.cyclic_part = checked_mul(left.cyclic_part / std::gcd(left.cyclic_part, right.cyclic_part),
                                                    right.cyclic_part);
                        c.weyl_order = checked_mul(left.weyl_order, right.weyl_order);
                        c.class_space_cells =
                            cell_product(left.class_space_cells, right.class_space_cells);
                        next.push_back(std::move(c));
                    }
                acc = std::move(next);
            }
            return acc;
        }
    }
    return {};
}

DefinableSpace conj_class_space(const LieGroupDescriptor& d) {
    DefinableSpace s;
    const auto data = cartan_data(d);
    for (std::size_t i = 0; i < data.size(); ++i)
        s.strata.push_back({"c" + std::to_string(i) + data[i].component_class,
                            data[i].class_space_cells});
    return s;
}

std::int64_t chi_ad(const LieGroupDescriptor& d) { return euler_char(conj_class_space(d)); }

std::vector<GroupAtom> descriptor_atoms(const LieGroupDescriptor& d, int iso_cap) {
    using Kind = LieGroupDescriptor::Kind;
    std::vector<GroupAtom> atoms;
    switch (d.kind) {
        case Kind::Finite:
            if (d.finite.order() > 1) atoms.push_back(GroupAtom::finite_from_group(d.finite, iso_cap));
            break;
        case Kind::Torus:
            for (int i = 0; i < d.rank; ++i) atoms.push_back(GroupAtom::lie_atom(LieAtom::Torus1));
            break;
        case Kind::SU2: atoms.push_back(GroupAtom::lie_atom(LieAtom::SU2)); break;
        case Kind::SO3: atoms.push_back(GroupAtom::lie_atom(LieAtom::SO3)); break;
        case Kind::O2: atoms.push_back(GroupAtom::lie_atom(LieAtom::O2)); break;
        case Kind::Product:
            for (const auto& f : d.factors) {
                auto fa = descriptor_atoms(f, iso_cap);
                atoms.insert(atoms.end(), fa.begin(), fa.end());
            }
            break;
    }
    return atoms;
}

namespace {

std::int64_t torus_gamma_weight(int rank, const GroupPresentation& gamma) {
    // Hom(Gamma, T^n) = T^(n*r) x (finite part); conjugation is trivial.
    // chi vanishes as soon as a torus factor is present.
    Abelianization ab = abelianization(gamma);
    if (ab.free_rank >= 1) return 0;
    std::int64_t count = 1;
    for (std::int64_t d : ab.torsion)
        for (int i = 0; i < rank; ++i) count = checked_mul(count, d);
    return count;
}

std::int64_t torus_gamma_components(int rank, const GroupPresentation& gamma) {
    // Components of Hom(Gamma, T^n): the free part is connected tori, the
    // torsion part contributes prod d_i^n discrete choices.
    Abelianization ab = abelianization(gamma);
    std::int64_t count = 1;
    for (std::int64_t d : ab.torsion)
        for (int i = 0; i < rank; ++i) count = checked_mul(count, d);
    return count;
}

[[noreturn]] void unsupported_gamma(const LieGroupDescriptor& d, const GroupPresentation& gamma) {
    throw UnsupportedGroupError("Hom(" + gamma_to_string(gamma) + ", " + descriptor_to_string(d) +
                                ") is not enumerable in this catalog (nonabelian Lie groups "
                                "support only the source Z)");
}

} // namespace

std::int64_t gamma_weight(const LieGroupDescriptor& d, const GroupPresentation& gamma) {
    using Kind = LieGroupDescriptor::Kind;
    switch (d.kind) {
        case Kind::Finite: return conj_orbit_count(enumerate_homs(gamma, d.finite));
        case Kind::Torus: return torus_gamma_weight(d.rank, gamma);
        case Kind::SU2:
        case Kind::SO3:
        case Kind::O2:
            if (is_free_rank_one(gamma)) return chi_ad(d);
            unsupported_gamma(d, gamma);
        case Kind::Product: {
            std::int64_t w = 1;
            for (const auto& f : d.factors) w = checked_mul(w, gamma_weight(f, gamma));
            return w;
        }
    }
    return 0;
}

Rational es_weight(const LieGroupDescriptor& d) {
    using Kind = LieGroupDescriptor::Kind;
    switch (d.kind) {
        case Kind::Finite: return Rational(1, d.finite.order());
        case Kind::Torus:
        case Kind::SU2:
        case Kind::SO3: return Rational(1);
        case Kind::O2: return Rational(1, 2);
        case Kind::Product: {
            Rational w(1);
            for (const auto& f : d.factors) w *= es_weight(f);
            return w;
        }
    }
    return Rational(1);
}

Rational gamma_es_weight(const LieGroupDescriptor& d, const GroupPresentation& gamma) {
    using Kind = LieGroupDescriptor::Kind;
    switch (d.kind) {
        case Kind::Finite: {
            auto hs = enumerate_homs(gamma, d.finite);
            return Rational(1, static_cast<std::int64_t>(hs.homs.size()));
        }
        case Kind::Torus: return Rational(1, torus_gamma_components(d.rank, gamma));
        case Kind::SU2:
        case Kind::SO3:
            if (is_free_rank_one(gamma)) return Rational(1);
            unsupported_gamma(d, gamma);
        case Kind::O2:
            if (is_free_rank_one(gamma)) return Rational(1, 2);
            unsupported_gamma(d, gamma);
        case Kind::Product: {
            Rational w(1);
            for (const auto& f : d.factors) w *= gamma_es_weight(f, gamma);
            return w;
        }
    }
    return Rational(1);
}

} // namespace orbchar
