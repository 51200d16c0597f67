#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace racktwist {

/// Element of S_n in one-line notation, acting on {1..n}.
///
/// Products compose as functions: (a * b)(i) == a(b(i)). The Coxeter length
/// (inversion count) is computed once at construction.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    static Permutation transposition(int n, int i, int j);
    /// The adjacent transposition s_k = (k k+1).
    static Permutation adjacent(int n, int k);
    /// s_{w[0]} * s_{w[1]} * ... ; the empty word gives the identity.
    static Permutation from_word(int n, std::span<const int> word);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return image_; }
    int length() const { return length_; }

    Permutation inverse() const;
    bool is_identity() const { return length_ == 0; }
    /// (i, j) with i < j when this is a transposition.
    std::optional<std::pair<int, int>> as_transposition() const;

    std::string to_string() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation& a, const Permutation& b) { return a.image_ == b.image_; }
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b)
    {
        return a.image_ <=> b.image_;
    }

private:
    std::vector<int> image_;
    int length_ = 0;
};

/// Lexicographically smallest reduced word of p: repeatedly strip the
/// smallest left descent.
std::vector<int> reduced_word(const Permutation& p);

/// A reduced word of p obtained by stripping a uniformly chosen left descent
/// at every step. `pick(d)` must return a value in [0, d).
template <class Pick>
std::vector<int> random_reduced_word(const Permutation& p, Pick&& pick)
{
    std::vector<int> word;
    std::vector<int> inv = p.inverse().one_line();
    const int n = p.size();
    while (true) {
        std::vector<int> descents;
        for (int k = 1; k < n; ++k)
            if (inv[static_cast<std::size_t>(k - 1)] > inv[static_cast<std::size_t>(k)])
                descents.push_back(k);
        if (descents.empty())
            return word;
        const int k = descents[static_cast<std::size_t>(pick(static_cast<int>(descents.size())))];
        word.push_back(k);
        std::swap(inv[static_cast<std::size_t>(k - 1)], inv[static_cast<std::size_t>(k)]);
    }
}

/// All of S_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

/// Conjugation x y x^{-1}.
inline Permutation conjugate(const Permutation& x, const Permutation& y) { return x * y * x.inverse(); }

} // namespace racktwist
