#include "orbchar/groupoid.hpp"

#include <map>
#include <set>

#include "orbchar/checked_int.hpp"
#include "orbchar/group_registry.hpp"

namespace orbchar {

void validate_model(const GroupoidModel& m) {
    std::set<std::string> seen;
    for (const auto& s : m.strata) {
        if (!seen.insert(s.label).second)
            throw GroupoidValidationError("duplicate stratum label '" + s.label + "'");
        for (const auto& [dim, count] : s.cells) {
            if (dim < 0)
                throw GroupoidValidationError("stratum '" + s.label + "' has a negative dimension");
            if (count < 0)
                throw GroupoidValidationError("stratum '" + s.label + "' has a negative cell count");
        }
    }
}

DefinableSpace underlying_space(const GroupoidModel& m) {
    DefinableSpace s;
    for (const auto& st : m.strata) s.strata.push_back({st.label, st.cells});
    return s;
}

RingElement chi_un(const GroupoidModel& m, int iso_cap) {
    validate_model(m);
    RingElement total;
    for (const auto& s : m.strata) {
        const std::int64_t chi = euler_char(s.cells);
        if (chi == 0) continue;
        Monomial mono = normalize_monomial(descriptor_atoms(s.isotropy, iso_cap), iso_cap);
        total += RingElement::monomial(std::move(mono), chi);
    }
    return total;
}

namespace {

// Weights depend only on the isotropy group, so repeated descriptors (the
// common case for random and product models) are computed once.
template <typename W, typename F>
W memoized_sum(const GroupoidModel& m, F&& weight_of, const char* invariant) {
    validate_model(m);
    std::map<std::string, W> cache;
    W total{};
    for (const auto& s : m.strata) {
        const std::int64_t chi = euler_char(s.cells);
        if (chi == 0) continue;
        const std::string key = descriptor_to_string(s.isotropy);
        auto it = cache.find(key);
        if (it == cache.end()) {
            try {
                it = cache.emplace(key, weight_of(s.isotropy)).first;
            } catch (const UnsupportedGroupError& e) {
                throw UnsupportedGroupError(std::string(invariant) + " undefined on stratum '" +
                                            s.label + "': " + e.what());
            }
        }
        total += it->second * W(chi);
    }
    return total;
}

struct CheckedInt {
    std::int64_t v = 0;
    CheckedInt() = default;
    explicit CheckedInt(std::int64_t x) : v(x) {}
    CheckedInt& operator+=(const CheckedInt& o) {
        v = checked_add(v, o.v);
        return *this;
    }
    friend CheckedInt operator*(const CheckedInt& a, const CheckedInt& b) {
        return CheckedInt(checked_mul(a.v, b.v));
    }
};

} // namespace

std::int64_t chi_gamma(const GroupoidModel& m, const GroupPresentation& gamma) {
    return memoized_sum<CheckedInt>(
               m, [&](const LieGroupDescriptor& d) { return CheckedInt(gamma_weight(d, gamma)); },
               "chi_gamma")
        .v;
}

Rational chi_es(const GroupoidModel& m) {
    return memoized_sum<Rational>(
        m, [](const LieGroupDescriptor& d) { return es_weight(d); }, "chi_es");
}

Rational chi_gamma_es(const GroupoidModel& m, const GroupPresentation& gamma) {
    return memoized_sum<Rational>(
        m, [&](const LieGroupDescriptor& d) { return gamma_es_weight(d, gamma); }, "chi_gamma_es");
}

namespace {

LieGroupDescriptor atom_descriptor(const GroupAtom& atom) {
    if (atom.kind == GroupAtom::Kind::Finite)
        return LieGroupDescriptor::finite_group(GroupRegistry::instance().representative(atom.finite_id));
    switch (atom.lie) {
        case LieAtom::Torus1: return LieGroupDescriptor::torus(1);
        case LieAtom::SU2: return LieGroupDescriptor::su2();
        case LieAtom::SO3: return LieGroupDescriptor::so3();
        case LieAtom::O2: return LieGroupDescriptor::o2();
    }
    return LieGroupDescriptor::finite_group(trivial_group());
}

} // namespace

std::int64_t gamma_weight_of_atom(const GroupAtom& atom, const GroupPresentation& gamma) {
    return gamma_weight(atom_descriptor(atom), gamma);
}

Rational es_weight_of_atom(const GroupAtom& atom) { return es_weight(atom_descriptor(atom)); }

GroupoidModel restrict(const GroupoidModel& m, const std::vector<std::string>& labels) {
    GroupoidModel out;
    for (const auto& want : labels) {
        bool found = false;
        for (const auto& s : m.strata)
            if (s.label == want) {
                out.strata.push_back(s);
                found = true;
                break;
            }
        if (!found) throw GroupoidValidationError("no stratum labelled '" + want + "'");
    }
    return out;
}

GroupoidModel product(const GroupoidModel& a, const GroupoidModel& b) {
    GroupoidModel out;
    for (const auto& sa : a.strata)
        for (const auto& sb : b.strata) {
            GroupoidStratum s;
            s.label = "(" + sa.label + ")x(" + sb.label + ")";
            s.cells = cell_product(sa.cells, sb.cells);
            s.isotropy = LieGroupDescriptor::product({sa.isotropy, sb.isotropy});
            out.strata.push_back(std::move(s));
        }
    return out;
}

} // namespace orbchar
