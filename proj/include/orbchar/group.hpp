#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbchar {

struct GroupValidationError : std::runtime_error {
    enum class Kind { NotSquare, BadIndex, NoIdentity, NoInverse, NotAssociative, TooLarge };
    Kind kind;
    GroupValidationError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

// Finite group as a validated multiplication table.  Everything downstream
// (hom enumeration, conjugation, products, isomorphism) works on indices
// into the table; element 'identity' is the two-sided unit.
class FiniteGroup {
public:
    FiniteGroup() = default;

    int order() const { return n_; }
    int identity() const { return identity_; }
    const std::string& name() const { return name_; }
    void rename(const std::string& name) { name_ = name; }

    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }  // g a g^-1
    int element_order(int a) const;

    bool is_abelian() const;

    const std::vector<int>& raw_table() const { return table_; }

    // Validates associativity, identity, and inverses; throws
    // GroupValidationError with the violated axiom.  Order is capped so the
    // O(n^3) associativity scan stays cheap.
    static FiniteGroup validate(const std::vector<std::vector<int>>& table,
                                const std::string& name = "");

    // Table known to be a group law by construction (catalog builders,
    // direct products); skips the associativity scan.
    static FiniteGroup trusted(std::vector<int> table, int n, const std::string& name);

private:
    int n_ = 0;
    int identity_ = 0;
    std::vector<int> table_;    // row-major n*n
    std::vector<int> inverse_;
    std::string name_;

    void fill_inverses();
};

inline constexpr int kValidateOrderCap = 512;
inline constexpr int kProductOrderCap = 1024;

// Componentwise product table; element (g, h) has index g*|H| + h.
// Throws GroupValidationError{TooLarge} past kProductOrderCap.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// Conjugacy classes as sorted element lists, ordered by smallest member.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

// Multiplication-table isomorphism test by backtracking over images of a
// generating sequence, with element-order profile pruning.  Orders above
// iso_cap are refused (the caller should canonicalize by explicit label).
struct IsoCapError : std::runtime_error {
    explicit IsoCapError(const std::string& what) : std::runtime_error(what) {}
};
bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h, int iso_cap = 64);

// Greedy generating sequence: repeatedly adjoin the smallest element outside
// the generated subgroup.  Small (<= log2 n) and deterministic.
std::vector<int> generating_sequence(const FiniteGroup& g);

FiniteGroup trivial_group();

} // namespace orbchar
