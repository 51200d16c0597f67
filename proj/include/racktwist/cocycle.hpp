#pragma once

#include "racktwist/errors.hpp"
#include "racktwist/rack.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace racktwist {

/// k x k table of exponents in Z/m over a fixed rack. Entry (x, y) stands for
/// ζ_m^e with ζ_m a fixed primitive m-th root of unity.
class ExponentTable {
public:
    ExponentTable(RackPtr rack, std::uint32_t order, std::vector<std::uint32_t> exponents);

    const FiniteRack& rack() const { return *rack_; }
    const RackPtr& rack_ptr() const { return rack_; }
    std::size_t size() const { return rack_->size(); }
    std::uint32_t order() const { return order_; }
    std::uint32_t operator()(std::size_t x, std::size_t y) const { return exp_[x * rack_->size() + y]; }
    const std::vector<std::uint32_t>& exponents() const { return exp_; }

    friend bool operator==(const ExponentTable& a, const ExponentTable& b)
    {
        return a.order_ == b.order_ && a.exp_ == b.exp_ && *a.rack_ == *b.rack_;
    }

private:
    RackPtr rack_;
    std::uint32_t order_;
    std::vector<std::uint32_t> exp_;
};

/// q_{x,y} = ζ_m^{exp[x][y]}. Not necessarily a cocycle until check_cocycle says so.
class RackCocycle : public ExponentTable {
public:
    using ExponentTable::ExponentTable;
};

/// Restriction of a candidate twisting function φ to X x X.
class TwistTable : public ExponentTable {
public:
    using ExponentTable::ExponentTable;
};

/// γ_x = ζ_m^{g[x]}.
class GaugeFunction {
public:
    GaugeFunction(RackPtr rack, std::uint32_t order, std::vector<std::uint32_t> g);

    const RackPtr& rack_ptr() const { return rack_; }
    std::uint32_t order() const { return order_; }
    std::uint32_t operator()(std::size_t x) const { return g_[x]; }
    const std::vector<std::uint32_t>& values() const { return g_; }
    GaugeFunction inverse() const;

    friend bool operator==(const GaugeFunction& a, const GaugeFunction& b)
    {
        return a.order_ == b.order_ && a.g_ == b.g_;
    }

private:
    RackPtr rack_;
    std::uint32_t order_;
    std::vector<std::uint32_t> g_;
};

RackCocycle constant_cocycle(RackPtr rack, std::uint32_t order, std::uint32_t e);

/// The sign cocycle χ on X_n (order 2): for σ a transposition and τ = (i j),
/// i < j, the exponent is 0 when σ(i) < σ(j) and 1 otherwise.
RackCocycle chi_cocycle(const TranspositionRack& xn);
RackCocycle chi_cocycle(int n);

/// exp[x][y▷z] + exp[y][z] == exp[x▷y][x▷z] + exp[x][z] (mod m) for all triples.
CheckResult check_cocycle(const RackCocycle& q);

/// exp'[x][y] = -g[x▷y] + exp[x][y] + g[y].
RackCocycle gauge_transform(const RackCocycle& q, const GaugeFunction& gamma);

/// Solve g[y] - g[x▷y] == exp2[x][y] - exp[x][y] (mod m), i.e. find γ with
/// gauge_transform(q, γ) == q2. The basepoint (smallest index) of each
/// connected component gets g = 0. Returns nullopt when no solution exists.
std::optional<GaugeFunction> find_gauge(const RackCocycle& q, const RackCocycle& q2);

/// q^φ: exp'[x][y] = phi[x][y] - phi[x▷y][x] + exp[x][y].
RackCocycle twist(const RackCocycle& q, const TwistTable& phi);

/// The four-term twist-validity identity over all triples.
CheckResult check_twist_condition(const TwistTable& phi);

/// Re-express a table of order m as one of order `new_order` (m must divide it).
RackCocycle lift_order(const RackCocycle& q, std::uint32_t new_order);
TwistTable lift_order(const TwistTable& phi, std::uint32_t new_order);
std::uint32_t common_order(std::uint32_t a, std::uint32_t b);

nlohmann::json cocycle_to_json(const RackCocycle& q);
nlohmann::json twist_to_json(const TwistTable& phi);
/// "rack" may be an inline rack object or a path string, resolved relative to `base_dir`.
RackCocycle cocycle_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
TwistTable twist_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});

} // namespace racktwist
