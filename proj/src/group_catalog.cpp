#include "orbchar/group_catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace orbchar {

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group needs n >= 1");
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    return FiniteGroup::trusted(std::move(t), n, "Z/" + std::to_string(n));
}

// D_n = <r, s | r^n, s^2, srs = r^-1>; element 2*i + j encodes r^i s^j.
FiniteGroup dihedral_group(int n) {
    if (n < 1) throw std::invalid_argument("dihedral_group needs n >= 1");
    const int ord = 2 * n;
    auto enc = [n](int i, int j) { return 2 * ((i % n + n) % n) + j; };
    std::vector<int> t(static_cast<std::size_t>(ord) * ord);
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + (-1)^j1 i2) s^(j1+j2)
                    int i = j1 == 0 ? i1 + i2 : i1 - i2;
                    int j = (j1 + j2) % 2;
                    t[static_cast<std::size_t>(enc(i1, j1)) * ord + enc(i2, j2)] = enc(i, j);
                }
    return FiniteGroup::trusted(std::move(t), ord, "D" + std::to_string(n));
}

// Dic_n = <a, b | a^(2n), b^2 = a^n, b a b^-1 = a^-1>; element 2*i + j
// encodes a^i b^j with i in [0, 2n).
FiniteGroup dicyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("dicyclic_group needs n >= 1");
    const int m = 2 * n;  // order of a
    const int ord = 4 * n;
    auto enc = [m](int i, int j) { return 2 * ((i % m + m) % m) + j; };
    std::vector<int> t(static_cast<std::size_t>(ord) * ord);
    for (int i1 = 0; i1 < m; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < m; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    // b a^k = a^-k b and b^2 = a^n
                    int i, j;
                    if (j1 == 0) {
                        i = i1 + i2;
                        j = j2;
                    } else if (j2 == 0) {
                        i = i1 - i2;
                        j = 1;
                    } else {
                        i = i1 - i2 + n;
                        j = 0;
                    }
                    t[static_cast<std::size_t>(enc(i1, j1)) * ord + enc(i2, j2)] = enc(i, j);
                }
    std::string name = n == 2 ? "Q8" : "Dic" + std::to_string(n);
    return FiniteGroup::trusted(std::move(t), ord, name);
}

namespace {

std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

bool is_even_permutation(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0;
}

FiniteGroup permutation_table(std::vector<std::vector<int>> elems, const std::string& name) {
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    const int ord = static_cast<int>(elems.size());
    std::vector<int> t(static_cast<std::size_t>(ord) * ord);
    for (int a = 0; a < ord; ++a)
        for (int b = 0; b < ord; ++b) {
            std::vector<int> comp(elems[0].size());
            for (std::size_t k = 0; k < comp.size(); ++k)
                comp[k] = elems[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                    elems[static_cast<std::size_t>(b)][k])];
            t[static_cast<std::size_t>(a) * ord + b] = index.at(comp);
        }
    return FiniteGroup::trusted(std::move(t), ord, name);
}

} // namespace

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("symmetric_group supports 1 <= n <= 5");
    return permutation_table(permutations_of(n), "S" + std::to_string(n));
}

FiniteGroup alternating_group(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("alternating_group supports 1 <= n <= 5");
    std::vector<std::vector<int>> evens;
    for (auto& p : permutations_of(n))
        if (is_even_permutation(p)) evens.push_back(p);
    return permutation_table(std::move(evens), "A" + std::to_string(n));
}

const std::vector<FiniteGroup>& bundled_catalog() {
    static const std::vector<FiniteGroup> catalog = [] {
        auto named_product = [](const FiniteGroup& a, const FiniteGroup& b, const std::string& nm) {
            FiniteGroup p = direct_product(a, b);
            p.rename(nm);
            return p;
        };
        const FiniteGroup z2 = cyclic_group(2);
        const FiniteGroup z3 = cyclic_group(3);
        const FiniteGroup z4 = cyclic_group(4);
        const FiniteGroup z6 = cyclic_group(6);
        std::vector<FiniteGroup> all;
        all.push_back(cyclic_group(1));
        all.push_back(z2);
        all.push_back(z3);
        all.push_back(z4);
        all.push_back(named_product(z2, z2, "Z/2 x Z/2"));
        all.push_back(cyclic_group(5));
        all.push_back(z6);
        all.push_back(symmetric_group(3));
        all.push_back(cyclic_group(7));
        all.push_back(cyclic_group(8));
        all.push_back(named_product(z2, z4, "Z/2 x Z/4"));
        all.push_back(named_product(z2, named_product(z2, z2, "Z/2 x Z/2"), "Z/2 x Z/2 x Z/2"));
        all.push_back(dihedral_group(4));
        all.push_back(dicyclic_group(2));  // Q8
        all.push_back(cyclic_group(9));
        all.push_back(named_product(z3, z3, "Z/3 x Z/3"));
        all.push_back(cyclic_group(10));
        all.push_back(dihedral_group(5));
        all.push_back(cyclic_group(11));
        all.push_back(cyclic_group(12));
        all.push_back(named_product(z2, z6, "Z/2 x Z/6"));
        all.push_back(dihedral_group(6));
        all.push_back(alternating_group(4));
        all.push_back(dicyclic_group(3));
        return all;
    }();
    return catalog;
}

std::optional<FiniteGroup> catalog_group(const std::string& name) {
    for (const auto& g : bundled_catalog())
        if (g.name() == name) return g;
    // Convenience aliases.
    if (name == "V4" || name == "K4") return catalog_group("Z/2 x Z/2");
    if (name == "D3") return catalog_group("S3");
    if (name == "Z/2xZ/2") return catalog_group("Z/2 x Z/2");
    return std::nullopt;
}

} // namespace orbchar
