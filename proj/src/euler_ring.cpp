#include "orbchar/euler_ring.hpp"

#include <algorithm>

namespace orbchar {

std::string lie_atom_label(LieAtom a) {
    switch (a) {
        case LieAtom::Torus1: return "T^1";
        case LieAtom::SU2: return "SU2";
        case LieAtom::SO3: return "SO3";
        case LieAtom::O2: return "O2";
    }
    return "?";
}

GroupAtom GroupAtom::finite(int registry_id) {
    GroupAtom a;
    a.kind = Kind::Finite;
    a.finite_id = registry_id;
    a.finite_order = GroupRegistry::instance().order(registry_id);
    return a;
}

GroupAtom GroupAtom::finite_from_group(const FiniteGroup& g, int iso_cap) {
    int id = GroupRegistry::instance().canonical_id(g, iso_cap);
    if (id < 0)
        throw std::invalid_argument("the trivial group is not an atom (it is the unit monomial)");
    return finite(id);
}

GroupAtom GroupAtom::lie_atom(LieAtom a) {
    GroupAtom r;
    r.kind = Kind::Lie;
    r.lie = a;
    return r;
}

std::string GroupAtom::label() const {
    if (kind == Kind::Finite) return GroupRegistry::instance().label(finite_id);
    return lie_atom_label(lie);
}

bool operator<(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(a.atoms.begin(), a.atoms.end(), b.atoms.begin(),
                                        b.atoms.end());
}

Monomial normalize_monomial(std::vector<GroupAtom> atoms, int iso_cap) {
    std::vector<GroupAtom> finites;
    std::vector<GroupAtom> lies;
    for (auto& a : atoms)
        (a.kind == GroupAtom::Kind::Finite ? finites : lies).push_back(a);

    if (finites.size() >= 2) {
        std::int64_t total = 1;
        bool within = true;
        for (const auto& a : finites) {
            total = checked_mul(total, a.finite_order);
            if (total > iso_cap) {
                within = false;
                break;
            }
        }
        if (within) {
            std::sort(finites.begin(), finites.end());
            const auto& reg = GroupRegistry::instance();
            FiniteGroup fused = reg.representative(finites[0].finite_id);
            for (std::size_t i = 1; i < finites.size(); ++i)
                fused = direct_product(fused, reg.representative(finites[i].finite_id));
            finites = {GroupAtom::finite_from_group(fused, iso_cap)};
        }
    }

    Monomial m;
    m.atoms = std::move(finites);
    m.atoms.insert(m.atoms.end(), lies.begin(), lies.end());
    std::sort(m.atoms.begin(), m.atoms.end());
    return m;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    RingElement r = a;
    for (const auto& [mono, coeff] : b.terms_) {
        auto it = r.terms_.find(mono);
        if (it == r.terms_.end()) {
            r.terms_[mono] = coeff;
        } else {
            it->second = checked_add(it->second, coeff);
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement RingElement::operator-() const {
    RingElement r;
    for (const auto& [mono, coeff] : terms_) r.terms_[mono] = checked_neg(coeff);
    return r;
}

RingElement RingElement::mul(const RingElement& a, const RingElement& b, int iso_cap) {
    RingElement r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            std::vector<GroupAtom> atoms = ma.atoms;
            atoms.insert(atoms.end(), mb.atoms.begin(), mb.atoms.end());
            Monomial m = normalize_monomial(std::move(atoms), iso_cap);
            std::int64_t c = checked_mul(ca, cb);
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                if (c != 0) r.terms_[std::move(m)] = c;
            } else {
                it->second = checked_add(it->second, c);
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

namespace {

std::string monomial_label(const Monomial& m) {
    std::string s;
    std::size_t i = 0;
    while (i < m.atoms.size()) {
        std::size_t j = i;
        while (j < m.atoms.size() && m.atoms[j] == m.atoms[i]) ++j;
        if (!s.empty()) s += "*";
        s += "T[" + m.atoms[i].label() + "]";
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

} // namespace

std::string RingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<std::string, std::int64_t>> parts;  // (label, coeff); "" = constant
    for (const auto& [mono, coeff] : terms_)
        parts.emplace_back(mono.is_constant() ? "" : monomial_label(mono), coeff);
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        if (a.first.empty() != b.first.empty()) return b.first.empty();  // constant last
        return a.first < b.first;
    });
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& [label, coeff] = parts[i];
        std::int64_t mag = coeff < 0 ? checked_neg(coeff) : coeff;
        if (i == 0) {
            if (coeff < 0) out += "-";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        if (label.empty()) {
            out += std::to_string(mag);
        } else if (mag == 1) {
            out += label;
        } else {
            out += std::to_string(mag) + "*" + label;
        }
    }
    return out;
}

} // namespace orbchar
