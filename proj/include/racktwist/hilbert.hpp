#pragma once

#include "racktwist/braided.hpp"
#include "racktwist/cocycle.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace racktwist {

/// Polynomial in t with nonnegative integer coefficients; index = degree.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::uint64_t> coefficients);

    static IntPolynomial one() { return IntPolynomial({1}); }
    /// (m)_t = 1 + t + ... + t^{m-1}.
    static IntPolynomial t_integer(int m);

    const std::vector<std::uint64_t>& coefficients() const { return c_; }
    std::uint64_t coefficient(std::size_t d) const { return d < c_.size() ? c_[d] : 0; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::uint64_t value_at_one() const;
    bool is_palindromic() const;

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<std::uint64_t> c_;
};

/// ∏ (m)_t^{multiplicity} over the given (m, multiplicity) factors.
IntPolynomial expand_closed_form(std::span<const std::pair<int, int>> factors);

enum class RankMode { exact, modular };

std::string to_string(RankMode mode);
RankMode rank_mode_from_string(const std::string& s);

/// Largest matrix dimension accepted by exact mode.
inline constexpr std::size_t kExactDimensionCap = 4096;

struct RankCertificate {
    std::size_t rank = 0;
    std::string method;
    std::vector<std::uint64_t> primes;
};

/// Deterministic Miller–Rabin, valid for all 64-bit inputs below 2^32·2^32.
bool is_prime(std::uint64_t n);
/// A prime p in [2^30, 2^31) with p ≡ 1 (mod m).
std::uint64_t draw_prime(std::mt19937_64& rng, std::uint32_t m);
/// An element of exact multiplicative order m in F_p (needs m | p-1).
std::uint64_t primitive_root_of_unity(std::uint64_t p, std::uint32_t m);

/// Rank over F_p with ζ_m mapped to `zeta`.
std::size_t rank_mod_p(const SymmetrizerMatrix& matrix, std::uint64_t p, std::uint64_t zeta);
/// Rank over Q of an integer (m <= 2) matrix.
std::size_t rank_exact(const SymmetrizerMatrix& matrix);

/// Exact mode: rank over Q, m <= 2, dim <= kExactDimensionCap.
/// Modular mode: ranks at two seeded primes must agree ("modular-certified
/// (Monte Carlo)"); on disagreement a third prime is drawn and, when the
/// matrix is small enough, exact elimination decides.
RankCertificate rank(const SymmetrizerMatrix& matrix, RankMode mode, std::uint64_t seed);

struct DegreeResult {
    int degree = 0;
    std::size_t dimension = 0;
    std::size_t rank = 0;
    std::string method;
    std::vector<std::uint64_t> primes;
};

struct ClosedFormComparison {
    std::vector<std::pair<int, int>> factors;
    IntPolynomial series;
    /// One verdict per computed degree.
    std::vector<bool> matches;
    bool all_match() const;
};

struct HilbertReport {
    std::string rack_id;
    std::string cocycle_id;
    std::size_t rack_size = 0;
    RankMode mode = RankMode::modular;
    std::uint64_t seed = 0;
    int max_degree = 0;
    std::vector<DegreeResult> degrees;
    std::optional<ClosedFormComparison> closed_form;

    std::vector<std::size_t> ranks() const;
    nlohmann::json to_json() const;
};

struct HilbertOptions {
    RankMode mode = RankMode::modular;
    std::uint64_t seed = 1;
    SymmetrizerOptions symmetrizer;
    std::string rack_id = "rack";
    std::string cocycle_id = "cocycle";
    /// When non-empty, ranks are compared against this closed-form series.
    std::vector<std::pair<int, int>> closed_form;
};

/// Ranks of Q_0 .. Q_max_degree. Degrees 0 and 1 are identities and are not
/// built. Resource errors are rethrown naming the failing degree.
HilbertReport graded_dims(const RackCocycle& q, int max_degree, const HilbertOptions& options = {});

struct TwistSeriesComparison {
    HilbertReport original;
    HilbertReport twisted;
    std::vector<bool> equal;
    bool all_equal() const;
};

/// Graded dimensions of q and twist(q, φ) degree by degree. φ must satisfy
/// check_twist_condition.
TwistSeriesComparison compare_twist_series(const RackCocycle& q, const TwistTable& phi, int max_degree,
                                           const HilbertOptions& options = {});

/// Closed-form Hilbert series factors known for X_4 and X_5; empty otherwise.
std::vector<std::pair<int, int>> known_transposition_series(int n);

} // namespace racktwist
