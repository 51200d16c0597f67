#pragma once

#include "racktwist/cocycle.hpp"
#include "racktwist/permutation.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace racktwist {

/// Invertible monomial operator: e_b -> ζ_m^{expo[b]} e_{target[b]}.
class MonomialOperator {
public:
    MonomialOperator(std::uint32_t order, std::vector<std::uint32_t> target, std::vector<std::uint32_t> expo);

    static MonomialOperator identity(std::size_t dim, std::uint32_t order);

    std::size_t dim() const { return target_.size(); }
    std::uint32_t order() const { return order_; }
    std::uint32_t target(std::size_t b) const { return target_[b]; }
    std::uint32_t expo(std::size_t b) const { return expo_[b]; }

    /// (a ∘ b)(e_i) = a(b(e_i)).
    friend MonomialOperator compose(const MonomialOperator& a, const MonomialOperator& b);
    friend bool operator==(const MonomialOperator&, const MonomialOperator&) = default;

private:
    std::uint32_t order_;
    std::vector<std::uint32_t> target_;
    std::vector<std::uint32_t> expo_;
};

/// Positive braid word σ_{w0} σ_{w1} ... on `strands` strands.
struct BraidWord {
    int strands = 0;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int strands, std::vector<int> letters);
};

/// c(x ⊗ y) = q_{x,y} (x▷y) ⊗ x on the K² basis pairs, index x*K + y.
MonomialOperator braiding_c(const RackCocycle& q);

/// ρ_n(word) on X^⊗degree; basis index = base-K digits with the leftmost
/// tensor factor most significant.
MonomialOperator rho(const BraidWord& word, const RackCocycle& q, int degree);

/// Lexicographically smallest reduced word of σ as a positive braid.
BraidWord matsumoto_word(const Permutation& sigma);

/// (c⊗id)(id⊗c)(c⊗id) == (id⊗c)(c⊗id)(id⊗c) as monomial operators.
bool check_braid_equation(const RackCocycle& q);

inline constexpr std::size_t kDefaultDimensionCap = 200000;

/// kDefaultDimensionCap unless RACKTWIST_DIM_CAP is set to a positive integer.
std::size_t default_dimension_cap();

/// Q_n = Σ_{σ∈S_n} ρ_n(μ(σ)) stored column-wise. Each entry records how
/// many permutations send the column's basis vector to `row` with scalar
/// ζ_m^{exp}.
class SymmetrizerMatrix {
public:
    struct Entry {
        std::uint32_t row;
        std::uint32_t exp;
        std::uint32_t count;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    SymmetrizerMatrix(int degree, std::uint32_t order, std::vector<std::size_t> col_start, std::vector<Entry> entries);

    int degree() const { return degree_; }
    std::uint32_t order() const { return order_; }
    std::size_t dim() const { return col_start_.size() - 1; }
    std::span<const Entry> column(std::size_t c) const
    {
        return {entries_.data() + col_start_[c], entries_.data() + col_start_[c + 1]};
    }
    std::size_t stored_entries() const { return entries_.size(); }

    /// Integer coefficient of (row, col); needs m <= 2.
    std::int64_t coefficient(std::size_t row, std::size_t col) const;
    /// Nonzero integer entries of one column, rows increasing; needs m <= 2.
    std::vector<std::pair<std::uint32_t, std::int64_t>> integer_column(std::size_t col) const;
    /// Nonzero entries of one column over F_p, with ζ_m mapped to `zeta`.
    std::vector<std::pair<std::uint32_t, std::uint64_t>> modular_column(std::size_t col, std::uint64_t p,
                                                                        std::uint64_t zeta) const;

    friend bool operator==(const SymmetrizerMatrix&, const SymmetrizerMatrix&) = default;

private:
    int degree_;
    std::uint32_t order_;
    std::vector<std::size_t> col_start_;
    std::vector<Entry> entries_;
};

struct SymmetrizerOptions {
    std::size_t dimension_cap = default_dimension_cap();
    unsigned workers = 1;
};

/// Adjacent-transposition Gray code of S_n (Steinhaus–Johnson–Trotter): the
/// 1-based positions swapped to move from one permutation to the next.
std::vector<int> sjt_swaps(int n);

SymmetrizerMatrix symmetrizer(const RackCocycle& q, int degree, const SymmetrizerOptions& options = {});

} // namespace racktwist
