#include "orbchar/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace orbchar {

int FiniteGroup::element_order(int a) const {
    int k = 1;
    int x = a;
    while (x != identity_) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

void FiniteGroup::fill_inverses() {
    inverse_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverse_[a] = b;
                break;
            }
}

FiniteGroup FiniteGroup::validate(const std::vector<std::vector<int>>& table, const std::string& name) {
    using Kind = GroupValidationError::Kind;
    const int n = static_cast<int>(table.size());
    if (n == 0)
        throw GroupValidationError(Kind::NotSquare, "empty multiplication table");
    if (n > kValidateOrderCap)
        throw GroupValidationError(Kind::TooLarge,
                                   "table order " + std::to_string(n) + " exceeds validation cap");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != n)
            throw GroupValidationError(Kind::NotSquare, "multiplication table is not square");
    for (const auto& row : table)
        for (int v : row)
            if (v < 0 || v >= n)
                throw GroupValidationError(Kind::BadIndex,
                                           "table entry " + std::to_string(v) + " out of range");

    FiniteGroup g;
    g.n_ = n;
    g.name_ = name;
    g.table_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table_[static_cast<std::size_t>(a) * n + b] = table[a][b];

    int id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) throw GroupValidationError(Kind::NoIdentity, "table has no two-sided identity");
    g.identity_ = id;

    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n && !found; ++b) found = g.mul(a, b) == id && g.mul(b, a) == id;
        if (!found)
            throw GroupValidationError(Kind::NoInverse,
                                       "element " + std::to_string(a) + " has no inverse");
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw GroupValidationError(
                        Kind::NotAssociative,
                        "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                            "," + std::to_string(c) + ")");

    g.fill_inverses();
    return g;
}

FiniteGroup FiniteGroup::trusted(std::vector<int> table, int n, const std::string& name) {
    FiniteGroup g;
    g.n_ = n;
    g.name_ = name;
    g.table_ = std::move(table);
    g.identity_ = -1;
    for (int e = 0; e < n && g.identity_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
        if (ok) g.identity_ = e;
    }
    if (g.identity_ < 0)
        throw GroupValidationError(GroupValidationError::Kind::NoIdentity,
                                   "trusted table has no identity");
    g.fill_inverses();
    return g;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const long long order = static_cast<long long>(g.order()) * h.order();
    if (order > kProductOrderCap)
        throw GroupValidationError(GroupValidationError::Kind::TooLarge,
                                   "direct product order " + std::to_string(order) +
                                       " exceeds cap " + std::to_string(kProductOrderCap));
    const int n = static_cast<int>(order);
    const int hn = h.order();
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ga = a / hn, ha = a % hn;
            int gb = b / hn, hb = b % hn;
            table[static_cast<std::size_t>(a) * n + b] = g.mul(ga, gb) * hn + h.mul(ha, hb);
        }
    std::string name = g.name().empty() || h.name().empty() ? "" : g.name() + " x " + h.name();
    return FiniteGroup::trusted(std::move(table), n, name);
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> classes;
    for (int a = 0; a < n; ++a) {
        if (seen[a]) continue;
        std::vector<int> cls;
        for (int x = 0; x < n; ++x) {
            int c = g.conj(x, a);
            if (!seen[c]) {
                seen[c] = true;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<int> generating_sequence(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<bool> in_subgroup(n, false);
    in_subgroup[g.identity()] = true;
    int covered = 1;
    std::vector<int> gens;
    while (covered < n) {
        int next = -1;
        for (int a = 0; a < n; ++a)
            if (!in_subgroup[a]) {
                next = a;
                break;
            }
        gens.push_back(next);
        // close under multiplication by the new generator
        std::vector<int> frontier;
        for (int a = 0; a < n; ++a)
            if (in_subgroup[a]) frontier.push_back(a);
        while (!frontier.empty()) {
            std::vector<int> fresh;
            for (int a : frontier)
                for (int s : gens) {
                    for (int x : {g.mul(a, s), g.mul(s, a)})
                        if (!in_subgroup[x]) {
                            in_subgroup[x] = true;
                            ++covered;
                            fresh.push_back(x);
                        }
                }
            frontier.swap(fresh);
        }
    }
    return gens;
}

namespace {

// Order profile: multiset of element orders, the cheap isomorphism invariant.
std::map<int, int> order_profile(const FiniteGroup& g) {
    std::map<int, int> prof;
    for (int a = 0; a < g.order(); ++a) ++prof[g.element_order(a)];
    return prof;
}

// Partial isomorphism, kept closed under products on its domain.
struct PartialIso {
    std::vector<int> phi;    // g index -> h index, -1 if unassigned
    std::vector<char> used;  // h indices already taken
    std::vector<int> known;  // assigned g indices, product-closed
};

// Adds a -> b and re-closes under products.  False on any conflict
// (non-homomorphic or non-injective extension).
bool extend(const FiniteGroup& g, const FiniteGroup& h, PartialIso& pm, int a, int b) {
    if (pm.phi[a] != -1) return pm.phi[a] == b;
    if (pm.used[b]) return false;
    pm.phi[a] = b;
    pm.used[b] = 1;
    std::size_t first_new = pm.known.size();
    pm.known.push_back(a);
    for (std::size_t i = first_new; i < pm.known.size(); ++i) {
        int x = pm.known[i];
        for (std::size_t j = 0; j < pm.known.size(); ++j) {
            int y = pm.known[j];
            const int prods[2] = {g.mul(x, y), g.mul(y, x)};
            const int images[2] = {h.mul(pm.phi[x], pm.phi[y]), h.mul(pm.phi[y], pm.phi[x])};
            for (int k = 0; k < 2; ++k) {
                int p = prods[k], q = images[k];
                if (pm.phi[p] == -1) {
                    if (pm.used[q]) return false;
                    pm.phi[p] = q;
                    pm.used[q] = 1;
                    pm.known.push_back(p);
                } else if (pm.phi[p] != q) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool iso_search(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& gens,
                std::size_t depth, const PartialIso& pm) {
    if (depth == gens.size()) return static_cast<int>(pm.known.size()) == g.order();
    const int want = g.element_order(gens[depth]);
    for (int cand = 0; cand < h.order(); ++cand) {
        if (pm.used[cand] || h.element_order(cand) != want) continue;
        PartialIso next = pm;
        if (extend(g, h, next, gens[depth], cand) && iso_search(g, h, gens, depth + 1, next))
            return true;
    }
    return false;
}

} // namespace

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h, int iso_cap) {
    if (g.order() != h.order()) return false;
    if (g.order() > iso_cap || h.order() > iso_cap)
        throw IsoCapError("isomorphism test refused for order " + std::to_string(g.order()) +
                          " above cap " + std::to_string(iso_cap));
    if (order_profile(g) != order_profile(h)) return false;
    if (g.is_abelian() != h.is_abelian()) return false;
    std::vector<int> gens = generating_sequence(g);
    PartialIso pm;
    pm.phi.assign(g.order(), -1);
    pm.used.assign(h.order(), 0);
    pm.phi[g.identity()] = h.identity();
    pm.used[h.identity()] = 1;
    pm.known.push_back(g.identity());
    return iso_search(g, h, gens, 0, pm);
}

FiniteGroup trivial_group() { return FiniteGroup::trusted({0}, 1, "Z/1"); }

} // namespace orbchar
