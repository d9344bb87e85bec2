#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbchar/checked_int.hpp"

namespace orbchar {

// dimension -> number of open cells of that dimension.  Purely combinatorial:
// the Euler characteristic used throughout is the cell-counting one,
// chi = sum over cells of (-1)^dim.  It is additive and multiplicative but
// NOT homotopy invariant (an open interval has chi = -1, not 1), so cell
// models of non-compact strata must count open cells as such.
using CellVector = std::map<int, std::int64_t>;

struct Stratum {
    std::string label;
    CellVector cells;
};

// Stratified cell-count model of a definable space.  Stratum labels are
// unique; the strata partition the space, so chi is the sum over strata.
struct DefinableSpace {
    std::vector<Stratum> strata;
};

struct InvalidSpaceError : std::runtime_error {
    explicit InvalidSpaceError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by integrate() when the integrand misses a stratum of the space.
struct MalformedFunctionError : std::runtime_error {
    explicit MalformedFunctionError(const std::string& what) : std::runtime_error(what) {}
};

// Checks label uniqueness and count non-negativity; throws InvalidSpaceError.
void validate_space(const DefinableSpace& s);

std::int64_t euler_char(const CellVector& cells);
std::int64_t euler_char(const DefinableSpace& s);

// Piecewise-constant integrand: one coefficient per stratum label.
template <class R>
struct ConstructibleFunction {
    std::map<std::string, R> values;
};

// Integral against the Euler characteristic: sum over strata of
// f(stratum) * chi(stratum).  Exact in the coefficient ring R.
template <class R>
R integrate(const ConstructibleFunction<R>& f, const DefinableSpace& s) {
    R acc = R(0);
    for (const auto& st : s.strata) {
        auto it = f.values.find(st.label);
        if (it == f.values.end())
            throw MalformedFunctionError("constructible function undefined on stratum '" + st.label + "'");
        acc += it->second * R(euler_char(st.cells));
    }
    return acc;
}

// Strata of the two sides are kept apart by namespacing labels "L:" / "R:".
DefinableSpace disjoint_union(const DefinableSpace& a, const DefinableSpace& b);

// Cell counts of a product stratum are the convolution of the factors'
// counts (a p-cell times a q-cell is an open (p+q)-cell).
CellVector cell_product(const CellVector& a, const CellVector& b);
DefinableSpace product(const DefinableSpace& a, const DefinableSpace& b);

// Convenience cell models used across tests and the catalog.
CellVector point_cells();                 // one 0-cell
CellVector open_cell(int dim);            // one open dim-cell
CellVector interval_cells();              // closed interval: two 0-cells, one 1-cell
CellVector circle_cells();                // one 0-cell, one open 1-cell

} // namespace orbchar
