#include "racktwist/permutation.hpp"

#include "racktwist/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace racktwist {

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line))
{
    const int n = size();
    if (n == 0)
        throw InvalidArgument("permutation must have n >= 1");
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw InvalidArgument("one-line notation is not a bijection on {1..n}");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (image_[i] > image_[j])
                ++length_;
}

Permutation Permutation::identity(int n)
{
    if (n < 1)
        throw InvalidArgument("identity needs n >= 1");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i, int j)
{
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw InvalidArgument("transposition (" + std::to_string(i) + " " + std::to_string(j) +
                              ") out of range for n=" + std::to_string(n));
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(j - 1)]);
    return Permutation(std::move(v));
}

Permutation Permutation::adjacent(int n, int k)
{
    if (k < 1 || k >= n)
        throw InvalidArgument("adjacent transposition index out of range");
    return transposition(n, k, k + 1);
}

Permutation Permutation::from_word(int n, std::span<const int> word)
{
    // Left-multiply by the letters from last to first.
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int k = *it;
        if (k < 1 || k >= n)
            throw InvalidArgument("word letter out of range");
        for (int& x : w) {
            if (x == k)
                x = k + 1;
            else if (x == k + 1)
                x = k;
        }
    }
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
        inv[static_cast<std::size_t>(image_[i] - 1)] = static_cast<int>(i + 1);
    return Permutation(std::move(inv));
}

std::optional<std::pair<int, int>> Permutation::as_transposition() const
{
    int first = 0, second = 0, moved = 0;
    for (int i = 1; i <= size(); ++i) {
        if ((*this)(i) != i) {
            ++moved;
            if (first == 0)
                first = i;
            else
                second = i;
        }
    }
    if (moved == 2 && (*this)(first) == second)
        return std::make_pair(first, second);
    return std::nullopt;
}

std::string Permutation::to_string() const
{
    std::ostringstream os;
    std::vector<bool> done(image_.size(), false);
    bool any = false;
    for (int i = 1; i <= size(); ++i) {
        if (done[static_cast<std::size_t>(i - 1)] || (*this)(i) == i)
            continue;
        any = true;
        os << '(';
        int j = i;
        bool first = true;
        while (!done[static_cast<std::size_t>(j - 1)]) {
            done[static_cast<std::size_t>(j - 1)] = true;
            os << (first ? "" : " ") << j;
            first = false;
            j = (*this)(j);
        }
        os << ')';
    }
    if (!any)
        os << "()";
    return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size())
        throw MismatchError("permutation degrees differ");
    std::vector<int> v(a.image_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.image_[static_cast<std::size_t>(b.image_[i] - 1)];
    return Permutation(std::move(v));
}

std::vector<int> reduced_word(const Permutation& p)
{
    // s_k is a left descent of w iff w^{-1}(k) > w^{-1}(k+1).
    std::vector<int> word;
    std::vector<int> inv = p.inverse().one_line();
    const int n = p.size();
    while (true) {
        int k = 1;
        while (k < n && inv[static_cast<std::size_t>(k - 1)] < inv[static_cast<std::size_t>(k)])
            ++k;
        if (k == n)
            break;
        word.push_back(k);
        // w <- s_k w swaps the values k, k+1 of w, i.e. positions k, k+1 of w^{-1}
        std::swap(inv[static_cast<std::size_t>(k - 1)], inv[static_cast<std::size_t>(k)]);
    }
    return word;
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace racktwist
