#include "orbchar/euler_calculus.hpp"

#include <set>

namespace orbchar {

void validate_space(const DefinableSpace& s) {
    std::set<std::string> seen;
    for (const auto& st : s.strata) {
        if (!seen.insert(st.label).second)
            throw InvalidSpaceError("duplicate stratum label '" + st.label + "'");
        for (const auto& [dim, count] : st.cells) {
            if (dim < 0) throw InvalidSpaceError("negative cell dimension in stratum '" + st.label + "'");
            if (count < 0) throw InvalidSpaceError("negative cell count in stratum '" + st.label + "'");
        }
    }
}

std::int64_t euler_char(const CellVector& cells) {
    std::int64_t chi = 0;
    for (const auto& [dim, count] : cells)
        chi = checked_add(chi, (dim % 2 == 0) ? count : checked_neg(count));
    return chi;
}

std::int64_t euler_char(const DefinableSpace& s) {
    std::int64_t chi = 0;
    for (const auto& st : s.strata) chi = checked_add(chi, euler_char(st.cells));
    return chi;
}

DefinableSpace disjoint_union(const DefinableSpace& a, const DefinableSpace& b) {
    DefinableSpace r;
    r.strata.reserve(a.strata.size() + b.strata.size());
    for (const auto& st : a.strata) r.strata.push_back({"L:" + st.label, st.cells});
    for (const auto& st : b.strata) r.strata.push_back({"R:" + st.label, st.cells});
    return r;
}

CellVector cell_product(const CellVector& a, const CellVector& b) {
    CellVector r;
    for (const auto& [da, ca] : a)
        for (const auto& [db, cb] : b) {
            if (ca == 0 || cb == 0) continue;
            auto& slot = r[da + db];
            slot = checked_add(slot, checked_mul(ca, cb));
        }
    return r;
}

DefinableSpace product(const DefinableSpace& a, const DefinableSpace& b) {
    DefinableSpace r;
    r.strata.reserve(a.strata.size() * b.strata.size());
    for (const auto& sa : a.strata)
        for (const auto& sb : b.strata)
            r.strata.push_back({"(" + sa.label + ")x(" + sb.label + ")", cell_product(sa.cells, sb.cells)});
    return r;
}

CellVector point_cells() { return {{0, 1}}; }

CellVector open_cell(int dim) { return {{dim, 1}}; }

CellVector interval_cells() { return {{0, 2}, {1, 1}}; }

CellVector circle_cells() { return {{0, 1}, {1, 1}}; }

} // namespace orbchar
