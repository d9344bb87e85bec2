#include "oracles.hpp"

namespace orbchar::testing {

std::vector<std::vector<int>> brute_force_homs(const GroupPresentation& p, const FiniteGroup& g) {
    const int k = p.generators;
    const auto eval = [&](const std::vector<int>& word, const std::vector<int>& images) {
        int acc = g.identity();
        for (int letter : word) {
            const int image = images[static_cast<std::size_t>(std::abs(letter) - 1)];
            acc = g.mul(acc, letter > 0 ? image : g.inv(image));
        }
        return acc;
    };
    std::vector<std::vector<int>> found;
    std::vector<int> images(static_cast<std::size_t>(k), 0);
    while (true) {
        bool ok = true;
        for (const auto& relator : p.relators)
            if (eval(relator, images) != g.identity()) {
                ok = false;
                break;
            }
        if (ok) found.push_back(images);
        int pos = k - 1;
        while (pos >= 0 && images[static_cast<std::size_t>(pos)] == g.order() - 1) {
            images[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++images[static_cast<std::size_t>(pos)];
    }
    return found;
}

std::int64_t burnside_orbits(const FiniteGroup& g, const std::vector<std::vector<int>>& homs) {
    if (homs.empty()) return 0;
    std::int64_t fixed_total = 0;
    for (int c = 0; c < g.order(); ++c)
        for (const auto& hom : homs) {
            bool fixed = true;
            for (int image : hom)
                if (g.mul(g.mul(c, image), g.inv(c)) != image) {
                    fixed = false;
                    break;
                }
            if (fixed) ++fixed_total;
        }
    return fixed_total / g.order();
}

std::int64_t naive_chi(const DefinableSpace& s) {
    std::int64_t acc = 0;
    for (const auto& st : s.strata)
        for (const auto& [dim, count] : st.cells) acc += (dim % 2 == 0) ? count : -count;
    return acc;
}

DefinableSpace random_space(std::mt19937_64& rng, int max_strata, int max_dim) {
    const auto pick = [&rng](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    DefinableSpace s;
    const int strata = pick(1, max_strata);
    for (int i = 0; i < strata; ++i) {
        CellVector cells;
        const int entries = pick(1, 3);
        for (int e = 0; e < entries; ++e) cells[pick(0, max_dim)] += pick(0, 3);
        s.strata.push_back({"s" + std::to_string(i), cells});
    }
    return s;
}

} // namespace orbchar::testing
