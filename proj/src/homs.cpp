#include "orbchar/homs.hpp"

#include <algorithm>
#include <cstdlib>

namespace orbchar {

int evaluate_word(const FiniteGroup& g, const std::vector<int>& word,
                  const std::vector<int>& assignment) {
    int acc = g.identity();
    for (int s : word) {
        int x = assignment[static_cast<std::size_t>(std::abs(s)) - 1];
        acc = g.mul(acc, s > 0 ? x : g.inv(x));
    }
    return acc;
}

namespace {

void dfs(const FiniteGroup& g, const GroupPresentation& gamma,
         const std::vector<std::vector<std::size_t>>& relators_closing_at, std::vector<int>& tuple,
         std::size_t depth, std::vector<std::vector<int>>& out) {
    if (depth == tuple.size()) {
        out.push_back(tuple);
        return;
    }
    for (int cand = 0; cand < g.order(); ++cand) {
        tuple[depth] = cand;
        bool ok = true;
        for (std::size_t ri : relators_closing_at[depth])
            if (evaluate_word(g, gamma.relators[ri], tuple) != g.identity()) {
                ok = false;
                break;
            }
        if (ok) dfs(g, gamma, relators_closing_at, tuple, depth + 1, out);
    }
    tuple[depth] = 0;
}

} // namespace

HomSet enumerate_homs(const GroupPresentation& gamma, const FiniteGroup& g) {
    const std::size_t k = static_cast<std::size_t>(gamma.generators);
    // relator index -> depth at which all of its generators are assigned
    std::vector<std::vector<std::size_t>> closing(k);
    for (std::size_t ri = 0; ri < gamma.relators.size(); ++ri) {
        std::size_t max_gen = 1;
        for (int s : gamma.relators[ri])
            max_gen = std::max(max_gen, static_cast<std::size_t>(std::abs(s)));
        closing[max_gen - 1].push_back(ri);
    }
    std::vector<int> tuple(k, 0);
    HomSet hs{g, gamma, {}};
    dfs(g, gamma, closing, tuple, 0, hs.homs);
    std::sort(hs.homs.begin(), hs.homs.end());
    return hs;
}

std::int64_t conj_orbit_count(const HomSet& h) {
    const auto& homs = h.homs;
    const FiniteGroup& g = h.group;
    if (homs.empty()) return 0;
    std::vector<char> seen(homs.size(), 0);
    std::int64_t orbits = 0;
    std::vector<int> image(homs[0].size());
    for (std::size_t i = 0; i < homs.size(); ++i) {
        if (seen[i]) continue;
        ++orbits;
        for (int x = 0; x < g.order(); ++x) {
            for (std::size_t j = 0; j < homs[i].size(); ++j) image[j] = g.conj(x, homs[i][j]);
            auto it = std::lower_bound(homs.begin(), homs.end(), image);
            // every conjugate of a hom is a hom, so the lookup always hits
            seen[static_cast<std::size_t>(it - homs.begin())] = 1;
        }
    }
    return orbits;
}

} // namespace orbchar
