#include "orbchar/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "orbchar/checked_int.hpp"

namespace orbchar {

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

void row_axpy(Matrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t j = 0; j < m[dst].size(); ++j)
        m[dst][j] = checked_sub(m[dst][j], checked_mul(q, m[src][j]));
}

void col_axpy(Matrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i][dst] = checked_sub(m[i][dst], checked_mul(q, m[i][src]));
}

} // namespace

std::vector<std::int64_t> smith_diagonal(Matrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::int64_t> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Pick the nonzero entry of least magnitude in the remaining block.
        std::size_t pi = t, pj = t;
        std::int64_t best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                std::int64_t v = std::abs(m[i][j]);
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;  // remaining block is zero
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool reduced = false;
        while (!reduced) {
            reduced = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (m[i][t] != 0) {
                    row_axpy(m, i, t, m[i][t] / m[t][t]);
                    if (m[i][t] != 0) {  // remainder left: swap up and restart
                        std::swap(m[t], m[i]);
                        reduced = false;
                    }
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (m[t][j] != 0) {
                    col_axpy(m, j, t, m[t][j] / m[t][t]);
                    if (m[t][j] != 0) {
                        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                        reduced = false;
                    }
                }
        }
        diag.push_back(std::abs(m[t][t]));
        ++t;
    }
    // Enforce the divisibility chain d1 | d2 | ... by gcd/lcm folding.
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            std::int64_t a = diag[i], b = diag[j];
            if (a == 0 || b == 0) continue;
            std::int64_t g = std::gcd(a, b);
            diag[i] = g;
            diag[j] = checked_mul(a / g, b);
        }
    std::sort(diag.begin(), diag.end(), [](std::int64_t a, std::int64_t b) {
        if ((a == 0) != (b == 0)) return b == 0;  // zeros (free part) last
        return a < b;
    });
    return diag;
}

Abelianization abelianization(const GroupPresentation& p) {
    Matrix rows = p.relator_exponents();
    Abelianization ab;
    if (rows.empty()) {
        ab.free_rank = p.generators;
        return ab;
    }
    std::vector<std::int64_t> diag = smith_diagonal(std::move(rows));
    int positive = 0;
    for (std::int64_t d : diag)
        if (d > 0) ++positive;
    ab.free_rank = p.generators - positive;
    for (std::int64_t d : diag)
        if (d > 1) ab.torsion.push_back(d);
    return ab;
}

} // namespace orbchar
