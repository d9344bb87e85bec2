#include "orbchar/presentation.hpp"

#include <cstdlib>

namespace orbchar {

GroupPresentation GroupPresentation::make(int generators, std::vector<std::vector<int>> relators) {
    if (generators < 0) throw PresentationError("negative generator count");
    if (generators == 0) {
        // Trivial group: model as <a | a> so downstream code never sees k = 0.
        return GroupPresentation{1, {{1}}};
    }
    for (const auto& w : relators)
        for (int s : w) {
            int idx = std::abs(s);
            if (idx < 1 || idx > generators)
                throw PresentationError("relator letter " + std::to_string(s) +
                                        " outside generator range 1.." + std::to_string(generators));
        }
    return GroupPresentation{generators, std::move(relators)};
}

GroupPresentation GroupPresentation::free_group(int k) { return make(k, {}); }

GroupPresentation GroupPresentation::free_abelian(int k) {
    std::vector<std::vector<int>> rel;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) rel.push_back({i, j, -i, -j});
    return make(k, std::move(rel));
}

GroupPresentation GroupPresentation::cyclic(int n) {
    if (n < 1) throw PresentationError("cyclic presentation needs n >= 1");
    std::vector<int> word(static_cast<std::size_t>(n), 1);
    return make(1, {word});
}

std::vector<std::vector<std::int64_t>> GroupPresentation::relator_exponents() const {
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(relators.size());
    for (const auto& w : relators) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(generators), 0);
        for (int s : w) row[static_cast<std::size_t>(std::abs(s)) - 1] += s > 0 ? 1 : -1;
        rows.push_back(std::move(row));
    }
    return rows;
}

GroupPresentation parse_gamma(const std::string& text) {
    if (text == "Z") return GroupPresentation::free_group(1);
    if (text.rfind("Z^", 0) == 0) {
        char* end = nullptr;
        long k = std::strtol(text.c_str() + 2, &end, 10);
        if (end && *end == '\0' && k >= 1 && k <= 8)
            return GroupPresentation::free_abelian(static_cast<int>(k));
        throw PresentationError("bad source-group shorthand '" + text + "' (want Z^k, 1 <= k <= 8)");
    }
    if (text.rfind("Z/", 0) == 0) {
        char* end = nullptr;
        long n = std::strtol(text.c_str() + 2, &end, 10);
        if (end && *end == '\0' && n >= 1)
            return GroupPresentation::cyclic(static_cast<int>(n));
        throw PresentationError("bad source-group shorthand '" + text + "' (want Z/n, n >= 1)");
    }
    throw PresentationError("unknown source-group shorthand '" + text + "' (accepted: Z, Z^k, Z/n)");
}

bool is_free_rank_one(const GroupPresentation& p) {
    return p.generators == 1 && p.relators.empty();
}

std::string gamma_to_string(const GroupPresentation& p) {
    if (p.relators.empty()) return p.generators == 1 ? "Z" : "F_" + std::to_string(p.generators);
    if (p.generators >= 2 && p.relators == GroupPresentation::free_abelian(p.generators).relators)
        return "Z^" + std::to_string(p.generators);
    if (p.generators == 1 && p.relators.size() == 1) {
        bool power = true;
        for (int letter : p.relators[0]) power = power && letter == 1;
        if (power) return "Z/" + std::to_string(p.relators[0].size());
    }
    std::string s = "<" + std::to_string(p.generators) + " gens | ";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        if (i) s += ", ";
        for (int letter : p.relators[i]) s += (letter > 0 ? "+" : "") + std::to_string(letter) + " ";
        if (!s.empty() && s.back() == ' ') s.pop_back();
    }
    return s + ">";
}

} // namespace orbchar
