#include "racktwist/cocycle.hpp"

#include <fstream>
#include <numeric>
#include <queue>

namespace racktwist {
namespace {

std::uint32_t add_mod(std::uint64_t a, std::uint64_t b, std::uint32_t m) { return static_cast<std::uint32_t>((a + b) % m); }
std::uint32_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint32_t m)
{
    return static_cast<std::uint32_t>((a + m - (b % m)) % m);
}

void require_same(const RackPtr& a, std::uint32_t ma, const RackPtr& b, std::uint32_t mb, const char* what)
{
    if (ma != mb)
        throw MismatchError(std::string(what) + ": orders differ (" + std::to_string(ma) + " vs " +
                            std::to_string(mb) + ")");
    if (a != b && !(*a == *b))
        throw MismatchError(std::string(what) + ": tables live on different racks");
}

std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v, std::uint32_t m)
{
    for (auto& e : v)
        e %= m;
    return v;
}

nlohmann::json table_rows(const ExponentTable& t)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t x = 0; x < t.size(); ++x) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t y = 0; y < t.size(); ++y)
            row.push_back(t(x, y));
        rows.push_back(std::move(row));
    }
    return rows;
}

struct ParsedTable {
    RackPtr rack;
    std::uint32_t order;
    std::vector<std::uint32_t> values;
};

ParsedTable parse_table(const nlohmann::json& j, const char* key, const std::filesystem::path& base_dir)
{
    try {
        const auto& rj = j.at("rack");
        FiniteRack rack = [&] {
            if (rj.is_string()) {
                std::filesystem::path p = rj.get<std::string>();
                if (p.is_relative() && !base_dir.empty())
                    p = base_dir / p;
                std::ifstream in(p);
                if (!in)
                    throw InvalidArgument("cannot open rack file " + p.string());
                return rack_from_json(nlohmann::json::parse(in));
            }
            return rack_from_json(rj);
        }();
        const auto m = j.at("order").get<std::uint32_t>();
        const auto& rows = j.at(key);
        const std::size_t k = rack.size();
        if (!rows.is_array() || rows.size() != k)
            throw InvalidArgument(std::string("JSON: `") + key + "` must have one row per rack element");
        std::vector<std::uint32_t> values;
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != k)
                throw InvalidArgument(std::string("JSON: `") + key + "` rows must have rack-size entries");
            for (const auto& v : row)
                values.push_back(v.get<std::uint32_t>());
        }
        return {std::make_shared<const FiniteRack>(std::move(rack)), m, std::move(values)};
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("JSON: ") + e.what());
    }
}

} // namespace

ExponentTable::ExponentTable(RackPtr rack, std::uint32_t order, std::vector<std::uint32_t> exponents)
    : rack_(std::move(rack)), order_(order), exp_(std::move(exponents))
{
    if (!rack_)
        throw InvalidArgument("exponent table needs a rack");
    if (order_ == 0)
        throw InvalidArgument("order m must be >= 1");
    if (exp_.size() != rack_->size() * rack_->size())
        throw InvalidArgument("exponent table must have k*k entries");
    exp_ = reduce(std::move(exp_), order_);
}

GaugeFunction::GaugeFunction(RackPtr rack, std::uint32_t order, std::vector<std::uint32_t> g)
    : rack_(std::move(rack)), order_(order), g_(std::move(g))
{
    if (!rack_ || order_ == 0)
        throw InvalidArgument("gauge function needs a rack and order >= 1");
    if (g_.size() != rack_->size())
        throw InvalidArgument("gauge function must have one exponent per rack element");
    g_ = reduce(std::move(g_), order_);
}

GaugeFunction GaugeFunction::inverse() const
{
    std::vector<std::uint32_t> neg(g_.size());
    for (std::size_t i = 0; i < g_.size(); ++i)
        neg[i] = sub_mod(0, g_[i], order_);
    return GaugeFunction(rack_, order_, std::move(neg));
}

RackCocycle constant_cocycle(RackPtr rack, std::uint32_t order, std::uint32_t e)
{
    if (order == 0 || e >= order)
        throw InvalidArgument("constant cocycle needs m >= 1 and 0 <= e < m");
    const std::size_t k = rack->size();
    return RackCocycle(std::move(rack), order, std::vector<std::uint32_t>(k * k, e));
}

RackCocycle chi_cocycle(const TranspositionRack& xn)
{
    const std::size_t k = xn.pairs.size();
    std::vector<std::uint32_t> exp(k * k);
    for (std::size_t x = 0; x < k; ++x) {
        const Permutation sigma = xn.element(x);
        for (std::size_t y = 0; y < k; ++y) {
            const auto [i, j] = xn.pairs[y];
            exp[x * k + y] = sigma(i) < sigma(j) ? 0 : 1;
        }
    }
    return RackCocycle(xn.rack, 2, std::move(exp));
}

RackCocycle chi_cocycle(int n)
{
    if (n < 3)
        throw InvalidArgument("chi cocycle needs n >= 3");
    return chi_cocycle(transposition_rack(n));
}

CheckResult check_cocycle(const RackCocycle& q)
{
    const auto& r = q.rack();
    const std::size_t k = r.size();
    const std::uint32_t m = q.order();
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            for (std::size_t z = 0; z < k; ++z) {
                const auto lhs = add_mod(q(x, r.op(y, z)), q(y, z), m);
                const auto rhs = add_mod(q(r.op(x, y), r.op(x, z)), q(x, z), m);
                if (lhs != rhs)
                    return CheckResult::fail(x, y, z, "rack 2-cocycle condition fails");
            }
    return CheckResult::pass();
}

RackCocycle gauge_transform(const RackCocycle& q, const GaugeFunction& gamma)
{
    require_same(q.rack_ptr(), q.order(), gamma.rack_ptr(), gamma.order(), "gauge_transform");
    const auto& r = q.rack();
    const std::size_t k = r.size();
    const std::uint32_t m = q.order();
    std::vector<std::uint32_t> out(k * k);
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            out[x * k + y] = sub_mod(add_mod(q(x, y), gamma(y), m), gamma(r.op(x, y)), m);
    return RackCocycle(q.rack_ptr(), m, std::move(out));
}

std::optional<GaugeFunction> find_gauge(const RackCocycle& q, const RackCocycle& q2)
{
    require_same(q.rack_ptr(), q.order(), q2.rack_ptr(), q2.order(), "find_gauge");
    const auto& r = q.rack();
    const std::size_t k = r.size();
    const std::uint32_t m = q.order();

    // Each equation g[x▷y] = g[y] - d[x][y] ties two elements together, so
    // inside a connected component every value is forced by the basepoint,
    // and shifting a whole component preserves every equation. Propagating
    // from g = 0 at each basepoint and then checking all equations is
    // therefore a complete decision procedure over Z/m for any m.
    constexpr std::uint32_t unset = ~std::uint32_t{0};
    std::vector<std::uint32_t> g(k, unset);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incident(k);
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            incident[y].emplace_back(x, y);
            incident[r.op(x, y)].emplace_back(x, y);
        }
    auto d = [&](std::size_t x, std::size_t y) { return sub_mod(q2(x, y), q(x, y), m); };

    for (std::size_t base = 0; base < k; ++base) {
        if (g[base] != unset)
            continue;
        g[base] = 0;
        std::queue<std::size_t> todo;
        todo.push(base);
        while (!todo.empty()) {
            const std::size_t u = todo.front();
            todo.pop();
            for (auto [x, y] : incident[u]) {
                const std::size_t t = r.op(x, y);
                if (g[y] != unset && g[t] == unset) {
                    g[t] = sub_mod(g[y], d(x, y), m);
                    todo.push(t);
                } else if (g[t] != unset && g[y] == unset) {
                    g[y] = add_mod(g[t], d(x, y), m);
                    todo.push(y);
                }
            }
        }
    }
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            if (sub_mod(g[y], g[r.op(x, y)], m) != d(x, y))
                return std::nullopt;
    return GaugeFunction(q.rack_ptr(), m, std::move(g));
}

RackCocycle twist(const RackCocycle& q, const TwistTable& phi)
{
    require_same(q.rack_ptr(), q.order(), phi.rack_ptr(), phi.order(), "twist");
    const auto& r = q.rack();
    const std::size_t k = r.size();
    const std::uint32_t m = q.order();
    std::vector<std::uint32_t> out(k * k);
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            out[x * k + y] = sub_mod(add_mod(phi(x, y), q(x, y), m), phi(r.op(x, y), x), m);
    return RackCocycle(q.rack_ptr(), m, std::move(out));
}

CheckResult check_twist_condition(const TwistTable& phi)
{
    const auto& r = phi.rack();
    const std::size_t k = r.size();
    const std::uint32_t m = phi.order();
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            for (std::size_t z = 0; z < k; ++z) {
                const std::size_t yz = r.op(y, z), xy = r.op(x, y), xz = r.op(x, z);
                const std::size_t xyz = r.op(x, yz);
                const std::uint64_t lhs = std::uint64_t{phi(x, z)} + phi(xy, xz) + phi(xyz, x) + phi(yz, y);
                const std::uint64_t rhs = std::uint64_t{phi(y, z)} + phi(x, yz) + phi(xyz, xy) + phi(xz, x);
                if (lhs % m != rhs % m)
                    return CheckResult::fail(x, y, z, "twist condition fails");
            }
    return CheckResult::pass();
}

std::uint32_t common_order(std::uint32_t a, std::uint32_t b) { return std::lcm(a, b); }

namespace {
std::vector<std::uint32_t> scale_exponents(const ExponentTable& t, std::uint32_t new_order)
{
    if (new_order == 0 || new_order % t.order() != 0)
        throw InvalidArgument("new order must be a multiple of " + std::to_string(t.order()));
    const std::uint32_t f = new_order / t.order();
    std::vector<std::uint32_t> out = t.exponents();
    for (auto& e : out)
        e *= f;
    return out;
}
} // namespace

RackCocycle lift_order(const RackCocycle& q, std::uint32_t new_order)
{
    return RackCocycle(q.rack_ptr(), new_order, scale_exponents(q, new_order));
}

TwistTable lift_order(const TwistTable& phi, std::uint32_t new_order)
{
    return TwistTable(phi.rack_ptr(), new_order, scale_exponents(phi, new_order));
}

nlohmann::json cocycle_to_json(const RackCocycle& q)
{
    return nlohmann::json{{"rack", rack_to_json(q.rack())}, {"order", q.order()}, {"exp", table_rows(q)}};
}

nlohmann::json twist_to_json(const TwistTable& phi)
{
    return nlohmann::json{{"rack", rack_to_json(phi.rack())}, {"order", phi.order()}, {"phi", table_rows(phi)}};
}

RackCocycle cocycle_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir)
{
    auto t = parse_table(j, "exp", base_dir);
    return RackCocycle(std::move(t.rack), t.order, std::move(t.values));
}

TwistTable twist_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir)
{
    auto t = parse_table(j, "phi", base_dir);
    return TwistTable(std::move(t.rack), t.order, std::move(t.values));
}

} // namespace racktwist
