#include "racktwist/hilbert.hpp"

#include "racktwist/errors.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>

namespace racktwist {

// ---------------------------------------------------------------------------
// Polynomials

IntPolynomial::IntPolynomial(std::vector<std::uint64_t> coefficients) : c_(std::move(coefficients)) { trim(); }

void IntPolynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

IntPolynomial IntPolynomial::t_integer(int m)
{
    if (m < 1)
        throw InvalidArgument("(m)_t needs m >= 1");
    return IntPolynomial(std::vector<std::uint64_t>(static_cast<std::size_t>(m), 1));
}

std::uint64_t IntPolynomial::value_at_one() const { return std::accumulate(c_.begin(), c_.end(), std::uint64_t{0}); }

bool IntPolynomial::is_palindromic() const { return std::equal(c_.begin(), c_.end(), c_.rbegin()); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.c_.empty() || b.c_.empty())
        return IntPolynomial();
    std::vector<std::uint64_t> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial expand_closed_form(std::span<const std::pair<int, int>> factors)
{
    IntPolynomial out = IntPolynomial::one();
    for (const auto& [m, mult] : factors) {
        if (mult < 0)
            throw InvalidArgument("factor multiplicity must be >= 0");
        const IntPolynomial f = IntPolynomial::t_integer(m);
        for (int i = 0; i < mult; ++i)
            out = out * f;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Primes

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1)
            r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t m)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            out.push_back(q);
            while (m % q == 0)
                m /= q;
        }
    if (m > 1)
        out.push_back(m);
    return out;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (n % p == 0)
            return n == p;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::uint64_t draw_prime(std::mt19937_64& rng, std::uint32_t m)
{
    if (m == 0)
        throw InvalidArgument("draw_prime needs m >= 1");
    std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << 30, (std::uint64_t{1} << 31) - 1);
    while (true) {
        const std::uint64_t p = dist(rng);
        if (p % m == 1 % m && is_prime(p))
            return p;
    }
}

std::uint64_t primitive_root_of_unity(std::uint64_t p, std::uint32_t m)
{
    if (m == 0 || (p - 1) % m != 0)
        throw InvalidArgument("m must divide p-1");
    const auto factors = prime_factors(m);
    for (std::uint64_t a = 2; a < p; ++a) {
        const std::uint64_t z = pow_mod(a, (p - 1) / m, p);
        if (std::all_of(factors.begin(), factors.end(), [&](std::uint32_t q) { return pow_mod(z, m / q, p) != 1; }))
            return z;
    }
    throw InternalError("no primitive root of unity found");
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

struct PrimeField {
    using value_type = std::uint64_t;
    std::uint64_t p;

    static bool is_zero(const value_type& v) { return v == 0; }
    value_type zero() const { return 0; }
    value_type inv(value_type a) const { return pow_mod(a, p - 2, p); }
    value_type mul(value_type a, value_type b) const { return a * b % p; }
    /// a - f*b
    void axpy(value_type& a, value_type f, value_type b) const { a = (a + p - f * b % p) % p; }
};

struct RationalField {
    using value_type = mpq_class;

    static bool is_zero(const value_type& v) { return sgn(v) == 0; }
    value_type zero() const { return 0; }
    value_type inv(const value_type& a) const { return 1 / a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    void axpy(value_type& a, const value_type& f, const value_type& b) const { a -= f * b; }
};

template <class V>
using SparseVector = std::vector<std::pair<std::uint32_t, V>>;

/// Rank of a set of sparse vectors of the given width by incremental
/// row-echelon insertion, sparsest vectors first.
template <class Field>
std::size_t echelon_rank(std::vector<SparseVector<typename Field::value_type>> vectors, std::size_t width,
                         const Field& f)
{
    using V = typename Field::value_type;
    std::stable_sort(vectors.begin(), vectors.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<SparseVector<V>> pivot(width);
    std::vector<bool> has_pivot(width, false);
    std::vector<V> acc(width, f.zero());
    std::size_t rank = 0;

    for (const auto& vec : vectors) {
        if (rank == width)
            break;
        if (vec.empty())
            continue;
        std::uint32_t lo = static_cast<std::uint32_t>(width);
        for (const auto& [i, v] : vec) {
            acc[i] = v;
            lo = std::min(lo, i);
        }
        for (std::size_t c = lo; c < width; ++c) {
            if (Field::is_zero(acc[c]))
                continue;
            if (has_pivot[c]) {
                const V factor = acc[c];
                for (const auto& [i, v] : pivot[c])
                    f.axpy(acc[i], factor, v);
                continue;
            }
            const V scale = f.inv(acc[c]);
            SparseVector<V> row;
            for (std::size_t i = c; i < width; ++i)
                if (!Field::is_zero(acc[i]))
                    row.emplace_back(static_cast<std::uint32_t>(i), f.mul(acc[i], scale));
            pivot[c] = std::move(row);
            has_pivot[c] = true;
            ++rank;
            break;
        }
        for (std::size_t i = lo; i < width; ++i)
            acc[i] = f.zero();
    }
    return rank;
}

/// The symmetrizer maps each basis vector into its braid-group orbit, so the
/// matrix splits into diagonal blocks along the connected components of its
/// nonzero pattern. Rank is additive over blocks.
template <class Field>
std::size_t blocked_rank(std::vector<SparseVector<typename Field::value_type>> columns, const Field& f)
{
    const std::size_t dim = columns.size();
    std::vector<std::uint32_t> parent(dim);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t c = 0; c < dim; ++c)
        for (const auto& [r, v] : columns[c]) {
            const auto a = find(static_cast<std::uint32_t>(c)), b = find(r);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }

    std::vector<std::vector<std::uint32_t>> blocks(dim);
    for (std::uint32_t i = 0; i < dim; ++i)
        blocks[find(i)].push_back(i);

    std::vector<std::uint32_t> local(dim);
    std::size_t total = 0;
    for (const auto& members : blocks) {
        if (members.empty())
            continue;
        for (std::uint32_t i = 0; i < members.size(); ++i)
            local[members[i]] = i;
        std::vector<SparseVector<typename Field::value_type>> vecs;
        vecs.reserve(members.size());
        for (auto c : members) {
            auto& col = columns[c];
            for (auto& entry : col)
                entry.first = local[entry.first];
            std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            vecs.push_back(std::move(col));
        }
        total += echelon_rank(std::move(vecs), members.size(), f);
    }
    return total;
}

} // namespace

std::size_t rank_mod_p(const SymmetrizerMatrix& matrix, std::uint64_t p, std::uint64_t zeta)
{
    std::vector<SparseVector<std::uint64_t>> cols(matrix.dim());
    for (std::size_t c = 0; c < matrix.dim(); ++c)
        cols[c] = matrix.modular_column(c, p, zeta);
    return blocked_rank(std::move(cols), PrimeField{p});
}

std::size_t rank_exact(const SymmetrizerMatrix& matrix)
{
    if (matrix.order() > 2)
        throw InvalidArgument("exact rank needs an integer matrix (m <= 2)");
    std::vector<SparseVector<mpq_class>> cols(matrix.dim());
    for (std::size_t c = 0; c < matrix.dim(); ++c)
        for (const auto& [r, v] : matrix.integer_column(c))
            cols[c].emplace_back(r, mpq_class(static_cast<long>(v)));
    return blocked_rank(std::move(cols), RationalField{});
}

std::string to_string(RankMode mode) { return mode == RankMode::exact ? "exact" : "modular"; }

RankMode rank_mode_from_string(const std::string& s)
{
    if (s == "exact")
        return RankMode::exact;
    if (s == "modular")
        return RankMode::modular;
    throw InvalidArgument("unknown rank mode '" + s + "' (expected exact or modular)");
}

RankCertificate rank(const SymmetrizerMatrix& matrix, RankMode mode, std::uint64_t seed)
{
    RankCertificate cert;
    if (mode == RankMode::exact) {
        if (matrix.order() > 2)
            throw InvalidArgument("exact mode needs m <= 2");
        if (matrix.dim() > kExactDimensionCap)
            throw ResourceError("dimension " + std::to_string(matrix.dim()) + " too large for exact mode (cap " +
                                std::to_string(kExactDimensionCap) + ")");
        cert.rank = rank_exact(matrix);
        cert.method = "exact";
        return cert;
    }

    std::mt19937_64 rng(seed);
    const std::uint32_t m = matrix.order();
    auto at_prime = [&](std::uint64_t p) { return rank_mod_p(matrix, p, primitive_root_of_unity(p, m)); };
    const std::uint64_t p1 = draw_prime(rng, m);
    std::uint64_t p2 = draw_prime(rng, m);
    while (p2 == p1)
        p2 = draw_prime(rng, m);
    const std::size_t r1 = at_prime(p1), r2 = at_prime(p2);
    cert.primes = {p1, p2};
    if (r1 == r2) {
        cert.rank = r1;
        cert.method = "modular-certified (Monte Carlo)";
        return cert;
    }
    std::uint64_t p3 = draw_prime(rng, m);
    while (p3 == p1 || p3 == p2)
        p3 = draw_prime(rng, m);
    const std::size_t r3 = at_prime(p3);
    cert.primes.push_back(p3);
    if (m <= 2 && matrix.dim() < kExactDimensionCap) {
        cert.rank = rank_exact(matrix);
        cert.method = "exact (modular disagreement fallback)";
    } else {
        // rank mod p never exceeds the rank over the cyclotomic field
        cert.rank = std::max({r1, r2, r3});
        cert.method = "modular-unresolved (max over primes)";
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Reports

bool ClosedFormComparison::all_match() const
{
    return std::all_of(matches.begin(), matches.end(), [](bool b) { return b; });
}

std::vector<std::size_t> HilbertReport::ranks() const
{
    std::vector<std::size_t> out;
    for (const auto& d : degrees)
        out.push_back(d.rank);
    return out;
}

nlohmann::json HilbertReport::to_json() const
{
    nlohmann::json j;
    j["schema_version"] = 1;
    j["rack"] = rack_id;
    j["cocycle"] = cocycle_id;
    j["rack_size"] = rack_size;
    j["mode"] = to_string(mode);
    j["seed"] = seed;
    j["max_degree"] = max_degree;
    nlohmann::json degs = nlohmann::json::array();
    for (const auto& d : degrees)
        degs.push_back({{"degree", d.degree},
                        {"dimension", d.dimension},
                        {"rank", d.rank},
                        {"method", d.method},
                        {"primes", d.primes}});
    j["degrees"] = std::move(degs);
    j["ranks"] = ranks();
    if (closed_form) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& [m, mult] : closed_form->factors)
            factors.push_back({m, mult});
        j["closed_form"] = {{"factors", factors},
                            {"coefficients", closed_form->series.coefficients()},
                            {"total_dimension", closed_form->series.value_at_one()},
                            {"matches", closed_form->matches},
                            {"all_match", closed_form->all_match()}};
    }
    return j;
}

HilbertReport graded_dims(const RackCocycle& q, int max_degree, const HilbertOptions& options)
{
    if (max_degree < 0)
        throw InvalidArgument("max degree must be >= 0");
    HilbertReport report;
    report.rack_id = options.rack_id;
    report.cocycle_id = options.cocycle_id;
    report.rack_size = q.size();
    report.mode = options.mode;
    report.seed = options.seed;
    report.max_degree = max_degree;

    const std::size_t k = q.size();
    report.degrees.push_back({0, 1, 1, "identity", {}});
    if (max_degree >= 1)
        report.degrees.push_back({1, k, k, "identity", {}});
    for (int d = 2; d <= max_degree; ++d) {
        try {
            const SymmetrizerMatrix qn = symmetrizer(q, d, options.symmetrizer);
            std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                              static_cast<std::uint32_t>(d)};
            std::uint32_t derived[2];
            seq.generate(derived, derived + 2);
            const std::uint64_t degree_seed = (std::uint64_t{derived[0]} << 32) | derived[1];
            RankCertificate cert = rank(qn, options.mode, degree_seed);
            report.degrees.push_back({d, qn.dim(), cert.rank, cert.method, cert.primes});
        } catch (const ResourceError& e) {
            throw ResourceError("degree " + std::to_string(d) + ": " + e.what());
        }
    }

    if (!options.closed_form.empty()) {
        ClosedFormComparison cmp;
        cmp.factors = options.closed_form;
        cmp.series = expand_closed_form(cmp.factors);
        for (const auto& d : report.degrees)
            cmp.matches.push_back(cmp.series.coefficient(static_cast<std::size_t>(d.degree)) == d.rank);
        report.closed_form = std::move(cmp);
    }
    return report;
}

bool TwistSeriesComparison::all_equal() const
{
    return std::all_of(equal.begin(), equal.end(), [](bool b) { return b; });
}

TwistSeriesComparison compare_twist_series(const RackCocycle& q, const TwistTable& phi, int max_degree,
                                           const HilbertOptions& options)
{
    if (auto check = check_twist_condition(phi); !check.ok())
        throw InvalidArgument("twist table fails the twist condition: " + check.failure->what);
    TwistSeriesComparison out;
    out.original = graded_dims(q, max_degree, options);
    HilbertOptions twisted_options = options;
    twisted_options.cocycle_id = options.cocycle_id + "^phi";
    out.twisted = graded_dims(twist(q, phi), max_degree, twisted_options);
    for (std::size_t i = 0; i < out.original.degrees.size(); ++i)
        out.equal.push_back(out.original.degrees[i].rank == out.twisted.degrees[i].rank);
    return out;
}

std::vector<std::pair<int, int>> known_transposition_series(int n)
{
    if (n == 4)
        return {{2, 2}, {3, 2}, {4, 2}};
    if (n == 5)
        return {{4, 4}, {5, 2}, {6, 4}};
    return {};
}

} // namespace racktwist
