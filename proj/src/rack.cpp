#include "racktwist/rack.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace racktwist {

FiniteRack::FiniteRack(std::size_t size, std::vector<std::uint32_t> op, std::vector<std::string> labels)
    : size_(size), op_(std::move(op)), labels_(std::move(labels))
{
    if (size_ == 0)
        throw InvalidArgument("rack must be non-empty");
    if (op_.size() != size_ * size_)
        throw InvalidArgument("operation table must have size*size entries");
    for (auto v : op_)
        if (v >= size_)
            throw InvalidArgument("operation table entry out of range");
    if (!labels_.empty() && labels_.size() != size_)
        throw InvalidArgument("label count does not match rack size");
}

std::string FiniteRack::label(std::size_t x) const
{
    return labels_.empty() ? std::to_string(x) : labels_[x];
}

FiniteRack FiniteRack::trivial(std::size_t size)
{
    std::vector<std::uint32_t> op(size * size);
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < size; ++y)
            op[x * size + y] = static_cast<std::uint32_t>(y);
    return FiniteRack(size, std::move(op));
}

std::size_t ConjugationRack::index_of(const Permutation& p) const
{
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || *it != p)
        throw InvalidArgument("permutation " + p.to_string() + " is not in the rack");
    return static_cast<std::size_t>(it - elements.begin());
}

std::size_t TranspositionRack::index_of(int i, int j) const
{
    if (i > j)
        std::swap(i, j);
    if (i < 1 || j > n || i == j)
        throw InvalidArgument("transposition label out of range");
    // pairs (a, b) with a < i come first: sum_{a<i} (n - a)
    std::size_t idx = 0;
    for (int a = 1; a < i; ++a)
        idx += static_cast<std::size_t>(n - a);
    return idx + static_cast<std::size_t>(j - i - 1);
}

ConjugationRack conjugacy_class_rack(std::span<const Permutation> generators, const Permutation& seed,
                                     std::size_t orbit_cap)
{
    for (const auto& g : generators)
        if (g.size() != seed.size())
            throw MismatchError("generator and seed degrees differ");

    std::set<Permutation> orbit{seed};
    std::queue<Permutation> frontier;
    frontier.push(seed);
    while (!frontier.empty()) {
        Permutation y = frontier.front();
        frontier.pop();
        for (const auto& g : generators) {
            Permutation c = conjugate(g, y);
            if (orbit.insert(c).second) {
                if (orbit.size() > orbit_cap)
                    throw ResourceError("orbit too large: exceeds cap of " + std::to_string(orbit_cap));
                frontier.push(std::move(c));
            }
        }
    }

    ConjugationRack out;
    out.elements.assign(orbit.begin(), orbit.end());
    const std::size_t k = out.elements.size();
    std::vector<std::uint32_t> op(k * k);
    std::vector<std::string> labels;
    labels.reserve(k);
    for (std::size_t x = 0; x < k; ++x) {
        labels.push_back(out.elements[x].to_string());
        for (std::size_t y = 0; y < k; ++y) {
            const Permutation c = conjugate(out.elements[x], out.elements[y]);
            auto it = std::lower_bound(out.elements.begin(), out.elements.end(), c);
            if (it == out.elements.end() || *it != c)
                throw InvalidArgument("seed orbit is not closed under conjugation by its own elements");
            op[x * k + y] = static_cast<std::uint32_t>(it - out.elements.begin());
        }
    }
    out.rack = std::make_shared<const FiniteRack>(k, std::move(op), std::move(labels));
    return out;
}

TranspositionRack transposition_rack(int n)
{
    if (n < 2)
        throw InvalidArgument("transposition rack needs n >= 2");
    TranspositionRack out;
    out.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out.pairs.push_back({i, j});

    const std::size_t k = out.pairs.size();
    std::vector<std::uint32_t> op(k * k);
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < k; ++x) {
        const Permutation sigma = out.element(x);
        labels.push_back("(" + std::to_string(out.pairs[x].i) + " " + std::to_string(out.pairs[x].j) + ")");
        for (std::size_t y = 0; y < k; ++y) {
            // σ (i j) σ^{-1} = (σ(i) σ(j))
            op[x * k + y] = static_cast<std::uint32_t>(out.index_of(sigma(out.pairs[y].i), sigma(out.pairs[y].j)));
        }
    }
    out.rack = std::make_shared<const FiniteRack>(k, std::move(op), std::move(labels));
    return out;
}

CheckResult check_rack_axioms(const FiniteRack& r)
{
    const std::size_t k = r.size();
    std::vector<bool> hit(k);
    for (std::size_t x = 0; x < k; ++x) {
        std::fill(hit.begin(), hit.end(), false);
        for (std::size_t y = 0; y < k; ++y) {
            const auto v = r.op(x, y);
            if (hit[v])
                return CheckResult::fail(x, 0, 0, "row " + std::to_string(x) + " is not a bijection");
            hit[v] = true;
        }
    }
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            for (std::size_t z = 0; z < k; ++z)
                if (r.op(x, r.op(y, z)) != r.op(r.op(x, y), r.op(x, z)))
                    return CheckResult::fail(x, y, z, "self-distributivity fails");
    return CheckResult::pass();
}

bool is_indecomposable(const FiniteRack& r)
{
    const std::size_t k = r.size();
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };
    std::size_t components = k;
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            auto a = find(y), b = find(r.op(x, y));
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    return components == 1;
}

std::vector<std::uint32_t> left_division_table(const FiniteRack& r)
{
    const std::size_t k = r.size();
    std::vector<std::uint32_t> div(k * k, static_cast<std::uint32_t>(k));
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            auto& slot = div[x * k + r.op(x, y)];
            if (slot != k)
                throw InvalidArgument("left translation is not bijective");
            slot = static_cast<std::uint32_t>(y);
        }
    return div;
}

nlohmann::json rack_to_json(const FiniteRack& r)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t x = 0; x < r.size(); ++x) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t y = 0; y < r.size(); ++y)
            row.push_back(r.op(x, y));
        rows.push_back(std::move(row));
    }
    nlohmann::json j{{"size", r.size()}, {"op", std::move(rows)}};
    j["labels"] = r.labels();
    return j;
}

FiniteRack rack_from_json(const nlohmann::json& j)
{
    try {
        const auto k = j.at("size").get<std::size_t>();
        const auto& rows = j.at("op");
        if (!rows.is_array() || rows.size() != k)
            throw InvalidArgument("rack JSON: op must have `size` rows");
        std::vector<std::uint32_t> op;
        op.reserve(k * k);
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != k)
                throw InvalidArgument("rack JSON: each op row must have `size` entries");
            for (const auto& v : row)
                op.push_back(v.get<std::uint32_t>());
        }
        std::vector<std::string> labels;
        if (j.contains("labels"))
            labels = j.at("labels").get<std::vector<std::string>>();
        return FiniteRack(k, std::move(op), std::move(labels));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("rack JSON: ") + e.what());
    }
}

} // namespace racktwist
