#pragma once

#include "racktwist/errors.hpp"
#include "racktwist/permutation.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace racktwist {

/// A finite rack stored as its operation table over dense indices 0..k-1.
///
/// Construction only validates shape and range; the rack axioms are checked
/// separately by check_rack_axioms so that malformed tables can be inspected.
class FiniteRack {
public:
    FiniteRack(std::size_t size, std::vector<std::uint32_t> op, std::vector<std::string> labels = {});

    std::size_t size() const { return size_; }
    std::uint32_t op(std::size_t x, std::size_t y) const { return op_[x * size_ + y]; }
    std::span<const std::uint32_t> table() const { return op_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(std::size_t x) const;

    /// Trivial rack x▷y = y.
    static FiniteRack trivial(std::size_t size);

    friend bool operator==(const FiniteRack& a, const FiniteRack& b)
    {
        return a.size_ == b.size_ && a.op_ == b.op_;
    }

private:
    std::size_t size_;
    std::vector<std::uint32_t> op_;
    std::vector<std::string> labels_;
};

using RackPtr = std::shared_ptr<const FiniteRack>;

struct TranspositionLabel {
    int i;
    int j;
    friend bool operator==(const TranspositionLabel&, const TranspositionLabel&) = default;
};

/// Conjugation rack together with the group elements behind each index.
struct ConjugationRack {
    RackPtr rack;
    std::vector<Permutation> elements;

    std::size_t index_of(const Permutation& p) const;
};

/// The rack X_n of transpositions of S_n, indexed by (i, j), i < j, in
/// lexicographic order.
struct TranspositionRack {
    RackPtr rack;
    int n = 0;
    std::vector<TranspositionLabel> pairs;

    std::size_t index_of(int i, int j) const;
    Permutation element(std::size_t x) const { return Permutation::transposition(n, pairs[x].i, pairs[x].j); }
};

inline constexpr std::size_t kDefaultOrbitCap = 10000;

/// Orbit of `seed` under conjugation by the group generated by `generators`,
/// sorted by one-line notation, with x▷y = x y x^{-1}.
ConjugationRack conjugacy_class_rack(std::span<const Permutation> generators, const Permutation& seed,
                                     std::size_t orbit_cap = kDefaultOrbitCap);

TranspositionRack transposition_rack(int n);

/// Row bijectivity first (rows in order), then self-distributivity over
/// triples in lexicographic order. Reports the first failure.
CheckResult check_rack_axioms(const FiniteRack& r);

/// Connectivity of the graph with edges {y, x▷y}.
bool is_indecomposable(const FiniteRack& r);

/// (x, z) -> the unique y with x▷y = z. Requires bijective rows.
std::vector<std::uint32_t> left_division_table(const FiniteRack& r);

nlohmann::json rack_to_json(const FiniteRack& r);
FiniteRack rack_from_json(const nlohmann::json& j);

} // namespace racktwist
