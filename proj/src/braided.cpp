#include "racktwist/braided.hpp"

#include "racktwist/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace racktwist {
namespace {

/// c or c^{-1} tabulated on pairs: pair x*K+y -> (new pair, exponent delta).
struct PairAction {
    std::vector<std::uint32_t> pair;
    std::vector<std::uint32_t> expo;
};

PairAction forward_action(const RackCocycle& q)
{
    const auto& r = q.rack();
    const std::size_t k = r.size();
    PairAction a{std::vector<std::uint32_t>(k * k), std::vector<std::uint32_t>(k * k)};
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            a.pair[x * k + y] = static_cast<std::uint32_t>(r.op(x, y) * k + x);
            a.expo[x * k + y] = q(x, y);
        }
    return a;
}

PairAction inverse_action(const RackCocycle& q)
{
    const auto& r = q.rack();
    const std::size_t k = r.size();
    const auto div = left_division_table(r);
    PairAction a{std::vector<std::uint32_t>(k * k), std::vector<std::uint32_t>(k * k)};
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = 0; v < k; ++v) {
            // (u, v) = c(x, y) with x = v and v▷y = u
            const std::size_t x = v, y = div[v * k + u];
            a.pair[u * k + v] = static_cast<std::uint32_t>(x * k + y);
            a.expo[u * k + v] = (q.order() - q(x, y)) % q.order();
        }
    return a;
}

std::size_t checked_dimension(std::size_t k, int degree, std::size_t cap)
{
    std::size_t dim = 1;
    for (int i = 0; i < degree; ++i) {
        if (dim > cap / std::max<std::size_t>(k, 1) + 1) {
            dim = cap + 1;
            break;
        }
        dim *= k;
    }
    if (dim > cap)
        throw ResourceError("tensor dimension " + std::to_string(k) + "^" + std::to_string(degree) +
                            " exceeds the dimension cap " + std::to_string(cap));
    return dim;
}

std::vector<std::uint32_t> place_weights(std::size_t k, int degree)
{
    // weights[a] for 1-based tensor position a; the leftmost factor is most significant
    std::vector<std::uint32_t> w(static_cast<std::size_t>(degree) + 2, 0);
    std::uint32_t p = 1;
    for (int a = degree; a >= 1; --a) {
        w[static_cast<std::size_t>(a)] = p;
        p *= static_cast<std::uint32_t>(k);
    }
    return w;
}

inline void apply_local(const PairAction& act, std::uint32_t k, const std::vector<std::uint32_t>& weights, int a,
                        std::uint32_t order, std::uint32_t& index, std::uint32_t& expo)
{
    const std::uint32_t wl = weights[static_cast<std::size_t>(a)];
    const std::uint32_t wr = weights[static_cast<std::size_t>(a) + 1];
    const std::uint32_t x = (index / wl) % k, y = (index / wr) % k;
    const std::uint32_t p = act.pair[x * k + y];
    index = index - x * wl - y * wr + (p / k) * wl + (p % k) * wr;
    expo = (expo + act.expo[x * k + y]) % order;
}

} // namespace

MonomialOperator::MonomialOperator(std::uint32_t order, std::vector<std::uint32_t> target, std::vector<std::uint32_t> expo)
    : order_(order), target_(std::move(target)), expo_(std::move(expo))
{
    if (order_ == 0)
        throw InvalidArgument("operator order must be >= 1");
    if (target_.size() != expo_.size())
        throw InvalidArgument("target and exponent arrays differ in length");
    std::vector<bool> hit(target_.size(), false);
    for (auto t : target_) {
        if (t >= target_.size() || hit[t])
            throw InvalidArgument("monomial operator target is not a bijection");
        hit[t] = true;
    }
    for (auto& e : expo_)
        e %= order_;
}

MonomialOperator MonomialOperator::identity(std::size_t dim, std::uint32_t order)
{
    std::vector<std::uint32_t> t(dim);
    for (std::size_t i = 0; i < dim; ++i)
        t[i] = static_cast<std::uint32_t>(i);
    return MonomialOperator(order, std::move(t), std::vector<std::uint32_t>(dim, 0));
}

MonomialOperator compose(const MonomialOperator& a, const MonomialOperator& b)
{
    if (a.dim() != b.dim() || a.order_ != b.order_)
        throw MismatchError("operator composition: dimension or order mismatch");
    std::vector<std::uint32_t> t(a.dim()), e(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        t[i] = a.target_[b.target_[i]];
        e[i] = (b.expo_[i] + a.expo_[b.target_[i]]) % a.order_;
    }
    return MonomialOperator(a.order_, std::move(t), std::move(e));
}

BraidWord::BraidWord(int strands_, std::vector<int> letters_) : strands(strands_), letters(std::move(letters_))
{
    if (strands < 1)
        throw InvalidArgument("braid word needs at least one strand");
    for (int k : letters)
        if (k < 1 || k >= strands)
            throw InvalidArgument("braid letter " + std::to_string(k) + " out of range for " + std::to_string(strands) +
                                  " strands");
}

MonomialOperator braiding_c(const RackCocycle& q)
{
    const PairAction a = forward_action(q);
    return MonomialOperator(q.order(), a.pair, a.expo);
}

MonomialOperator rho(const BraidWord& word, const RackCocycle& q, int degree)
{
    if (degree < 1)
        throw InvalidArgument("rho needs degree >= 1");
    if (word.strands != degree)
        throw MismatchError("braid word strand count differs from tensor degree");
    for (int k : word.letters)
        if (k < 1 || k >= degree)
            throw InvalidArgument("braid letter out of range for degree");
    const auto k = static_cast<std::uint32_t>(q.size());
    const std::size_t dim = checked_dimension(k, degree, default_dimension_cap());
    const PairAction act = forward_action(q);
    const auto weights = place_weights(k, degree);
    std::vector<std::uint32_t> target(dim), expo(dim);
    for (std::size_t b = 0; b < dim; ++b) {
        auto index = static_cast<std::uint32_t>(b);
        std::uint32_t e = 0;
        for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
            apply_local(act, k, weights, *it, q.order(), index, e);
        target[b] = index;
        expo[b] = e;
    }
    return MonomialOperator(q.order(), std::move(target), std::move(expo));
}

BraidWord matsumoto_word(const Permutation& sigma) { return BraidWord(sigma.size(), reduced_word(sigma)); }

bool check_braid_equation(const RackCocycle& q)
{
    return rho(BraidWord(3, {1, 2, 1}), q, 3) == rho(BraidWord(3, {2, 1, 2}), q, 3);
}

std::size_t default_dimension_cap()
{
    if (const char* env = std::getenv("RACKTWIST_DIM_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return kDefaultDimensionCap;
}

SymmetrizerMatrix::SymmetrizerMatrix(int degree, std::uint32_t order, std::vector<std::size_t> col_start,
                                     std::vector<Entry> entries)
    : degree_(degree), order_(order), col_start_(std::move(col_start)), entries_(std::move(entries))
{
    if (col_start_.empty() || col_start_.back() != entries_.size())
        throw InvalidArgument("malformed column index");
}

std::int64_t SymmetrizerMatrix::coefficient(std::size_t row, std::size_t col) const
{
    if (order_ > 2)
        throw InvalidArgument("integer coefficients need m <= 2");
    std::int64_t v = 0;
    for (const auto& e : column(col))
        if (e.row == row)
            v += e.exp == 0 ? std::int64_t{e.count} : -std::int64_t{e.count};
    return v;
}

std::vector<std::pair<std::uint32_t, std::int64_t>> SymmetrizerMatrix::integer_column(std::size_t col) const
{
    if (order_ > 2)
        throw InvalidArgument("integer coefficients need m <= 2");
    std::vector<std::pair<std::uint32_t, std::int64_t>> out;
    for (const auto& e : column(col)) {
        const std::int64_t v = e.exp == 0 ? std::int64_t{e.count} : -std::int64_t{e.count};
        if (!out.empty() && out.back().first == e.row)
            out.back().second += v;
        else
            out.emplace_back(e.row, v);
    }
    std::erase_if(out, [](const auto& p) { return p.second == 0; });
    return out;
}

std::vector<std::pair<std::uint32_t, std::uint64_t>> SymmetrizerMatrix::modular_column(std::size_t col, std::uint64_t p,
                                                                                      std::uint64_t zeta) const
{
    std::vector<std::uint64_t> powers(order_, 1);
    for (std::uint32_t i = 1; i < order_; ++i)
        powers[i] = powers[i - 1] * zeta % p;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> out;
    for (const auto& e : column(col)) {
        const std::uint64_t v = powers[e.exp] * (e.count % p) % p;
        if (!out.empty() && out.back().first == e.row)
            out.back().second = (out.back().second + v) % p;
        else
            out.emplace_back(e.row, v);
    }
    std::erase_if(out, [](const auto& pr) { return pr.second == 0; });
    return out;
}

std::vector<int> sjt_swaps(int n)
{
    std::vector<int> swaps;
    if (n < 2)
        return swaps;
    std::vector<int> perm(static_cast<std::size_t>(n)), dir(static_cast<std::size_t>(n) + 1, -1);
    for (int i = 0; i < n; ++i)
        perm[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        int mobile = 0, pos = -1;
        for (int i = 0; i < n; ++i) {
            const int v = perm[static_cast<std::size_t>(i)];
            const int j = i + dir[static_cast<std::size_t>(v)];
            if (j >= 0 && j < n && perm[static_cast<std::size_t>(j)] < v && v > mobile) {
                mobile = v;
                pos = i;
            }
        }
        if (mobile == 0)
            break;
        const int j = pos + dir[static_cast<std::size_t>(mobile)];
        std::swap(perm[static_cast<std::size_t>(pos)], perm[static_cast<std::size_t>(j)]);
        swaps.push_back(std::min(pos, j) + 1);
        for (int v = mobile + 1; v <= n; ++v)
            dir[static_cast<std::size_t>(v)] = -dir[static_cast<std::size_t>(v)];
    }
    return swaps;
}

SymmetrizerMatrix symmetrizer(const RackCocycle& q, int degree, const SymmetrizerOptions& options)
{
    if (degree < 0)
        throw InvalidArgument("symmetrizer degree must be >= 0");
    const auto k = static_cast<std::uint32_t>(q.size());
    const std::size_t dim = checked_dimension(k, degree, options.dimension_cap);
    const std::uint32_t m = q.order();
    using Entry = SymmetrizerMatrix::Entry;

    if (degree <= 1) {
        std::vector<std::size_t> start(dim + 1);
        std::vector<Entry> entries(dim);
        for (std::size_t b = 0; b < dim; ++b) {
            start[b + 1] = b + 1;
            entries[b] = Entry{static_cast<std::uint32_t>(b), 0, 1};
        }
        return SymmetrizerMatrix(degree, m, std::move(start), std::move(entries));
    }

    // Walk S_n by adjacent transpositions π -> π s_a; with σ = π^{-1} this is
    // σ -> s_a σ, so each step applies one c (length grows) or one c^{-1}
    // (length drops) to the current image vector.
    struct Step {
        int position;
        bool forward;
    };
    std::vector<Step> steps;
    {
        std::vector<int> pi(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i)
            pi[static_cast<std::size_t>(i)] = i + 1;
        for (int a : sjt_swaps(degree)) {
            const auto i = static_cast<std::size_t>(a - 1);
            steps.push_back({a, pi[i] < pi[i + 1]});
            std::swap(pi[i], pi[i + 1]);
        }
    }
    const PairAction fwd = forward_action(q);
    const PairAction inv = inverse_action(q);
    const auto weights = place_weights(k, degree);
    const std::size_t per_column = steps.size() + 1;

    std::vector<std::vector<Entry>> column_entries(dim);
    auto build = [&](std::size_t begin, std::size_t end) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> images(per_column);
        for (std::size_t b = begin; b < end; ++b) {
            auto index = static_cast<std::uint32_t>(b);
            std::uint32_t e = 0;
            images[0] = {index, e};
            for (std::size_t s = 0; s < steps.size(); ++s) {
                apply_local(steps[s].forward ? fwd : inv, k, weights, steps[s].position, m, index, e);
                images[s + 1] = {index, e};
            }
            std::sort(images.begin(), images.end());
            auto& out = column_entries[b];
            for (const auto& [row, ex] : images) {
                if (!out.empty() && out.back().row == row && out.back().exp == ex)
                    ++out.back().count;
                else
                    out.push_back(Entry{row, ex, 1});
            }
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(dim)));
    if (workers == 1) {
        build(0, dim);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (dim + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk, end = std::min(dim, begin + chunk);
            if (begin < end)
                pool.emplace_back(build, begin, end);
        }
    }

    std::vector<std::size_t> start(dim + 1, 0);
    for (std::size_t b = 0; b < dim; ++b)
        start[b + 1] = start[b] + column_entries[b].size();
    std::vector<Entry> entries;
    entries.reserve(start[dim]);
    for (auto& col : column_entries) {
        entries.insert(entries.end(), col.begin(), col.end());
        std::vector<Entry>().swap(col);
    }
    return SymmetrizerMatrix(degree, m, std::move(start), std::move(entries));
}

} // namespace racktwist
