#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the code paths they are used to check.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using DenseMatrix = std::vector<std::vector<mpq_class>>;

/// Textbook Gauss–Jordan over Q on the full matrix.
inline std::size_t dense_rank(DenseMatrix a)
{
    const std::size_t rows = a.size();
    if (rows == 0)
        return 0;
    const std::size_t cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(a[piv][c]) == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0)
                continue;
            const mpq_class f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

/// Coefficient of t^d in ∏ (m_i)_t: number of tuples 0 <= a_i < m_i with sum d.
inline std::uint64_t count_tuples(const std::vector<int>& moduli, int d)
{
    std::function<std::uint64_t(std::size_t, int)> rec = [&](std::size_t i, int left) -> std::uint64_t {
        if (left < 0)
            return 0;
        if (i == moduli.size())
            return left == 0 ? 1 : 0;
        std::uint64_t total = 0;
        for (int a = 0; a < moduli[i]; ++a)
            total += rec(i + 1, left - a);
        return total;
    };
    return rec(0, d);
}

/// A reduced word by bubble sort from the right: repeatedly swap the
/// rightmost adjacent inversion of the one-line notation. Returns the word
/// w with p = s_{w0} s_{w1} ... (letters are recorded as right factors).
inline std::vector<int> bubble_reduced_word(std::vector<int> one_line)
{
    std::vector<int> right_factors;
    const int n = static_cast<int>(one_line.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = n - 1; a >= 1; --a)
            if (one_line[a - 1] > one_line[a]) {
                // p = p' s_a with p' = p s_a having one fewer inversion
                std::swap(one_line[a - 1], one_line[a]);
                right_factors.push_back(a);
                changed = true;
                break;
            }
    }
    std::reverse(right_factors.begin(), right_factors.end());
    return right_factors;
}

/// Dense integer symmetrizer for an order-2 cocycle given as plain tables
/// op[x][y], e[x][y]: sum over all permutations (std::next_permutation) of
/// the braided action along bubble-sort reduced words, acting on explicit
/// digit tuples.
inline std::vector<std::vector<long>> dense_symmetrizer(const std::vector<std::vector<int>>& op,
                                                        const std::vector<std::vector<int>>& e, int degree)
{
    const int k = static_cast<int>(op.size());
    int dim = 1;
    for (int i = 0; i < degree; ++i)
        dim *= k;
    std::vector<std::vector<long>> q(static_cast<std::size_t>(dim), std::vector<long>(static_cast<std::size_t>(dim), 0));

    auto to_digits = [&](int b) {
        std::vector<int> d(static_cast<std::size_t>(degree));
        for (int p = degree - 1; p >= 0; --p) {
            d[static_cast<std::size_t>(p)] = b % k;
            b /= k;
        }
        return d;
    };
    auto from_digits = [&](const std::vector<int>& d) {
        int b = 0;
        for (int v : d)
            b = b * k + v;
        return b;
    };

    std::vector<int> perm(static_cast<std::size_t>(degree));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        const std::vector<int> word = bubble_reduced_word(perm);
        for (int b = 0; b < dim; ++b) {
            std::vector<int> d = to_digits(b);
            int sign = 1;
            // ρ(σ_{w0}) ... ρ(σ_{wl}): apply the last letter first
            for (auto it = word.rbegin(); it != word.rend(); ++it) {
                const auto a = static_cast<std::size_t>(*it - 1);
                const int x = d[a], y = d[a + 1];
                if (e[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] % 2)
                    sign = -sign;
                d[a] = op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
                d[a + 1] = x;
            }
            q[static_cast<std::size_t>(from_digits(d))][static_cast<std::size_t>(b)] += sign;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return q;
}

inline DenseMatrix to_rational(const std::vector<std::vector<long>>& m)
{
    DenseMatrix out;
    for (const auto& row : m) {
        std::vector<mpq_class> r;
        for (long v : row)
            r.emplace_back(v);
        out.push_back(std::move(r));
    }
    return out;
}

/// Every exponent vector g in (Z/m)^k; calls f(g) until it returns true.
inline bool enumerate_gauges(std::size_t k, std::uint32_t m, const std::function<bool(const std::vector<std::uint32_t>&)>& f)
{
    std::vector<std::uint32_t> g(k, 0);
    while (true) {
        if (f(g))
            return true;
        std::size_t i = 0;
        while (i < k && ++g[i] == m)
            g[i++] = 0;
        if (i == k)
            return false;
    }
}

} // namespace oracle
