#pragma once

#include "racktwist/quad_scalar.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace racktwist {

/// Element of the real Clifford algebra on e_1..e_n with e_i² = 1 and
/// e_i e_j = -e_j e_i, coefficients in Q(√2). Basis monomials are bitmasks,
/// bit i-1 standing for e_i, written in increasing index order.
class CliffordElement {
public:
    using Mask = std::uint32_t;
    static constexpr int kMaxGenerators = 31;

    explicit CliffordElement(int n);

    static CliffordElement scalar(int n, const QuadScalar& c);
    /// The generator e_i, 1 <= i <= n.
    static CliffordElement basis_vector(int n, int i);

    int dimension() const { return n_; }
    const std::map<Mask, QuadScalar>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    QuadScalar coefficient(Mask m) const;
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    /// Adds c·e_mask; zero results are dropped.
    void add_term(Mask m, const QuadScalar& c);

    /// Reversion: e_{i1}...e_{ik} -> e_{ik}...e_{i1}, sign (-1)^{k(k-1)/2}.
    CliffordElement reverse() const;
    /// All masks share the same popcount parity.
    bool is_parity_homogeneous() const;

    CliffordElement operator-() const;
    friend CliffordElement operator+(const CliffordElement& a, const CliffordElement& b);
    friend CliffordElement operator-(const CliffordElement& a, const CliffordElement& b);
    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
    friend CliffordElement operator*(const QuadScalar& c, const CliffordElement& a);
    friend bool operator==(const CliffordElement& a, const CliffordElement& b)
    {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    int n_;
    std::map<Mask, QuadScalar> terms_;
};

/// Sign of e_S e_T relative to e_{S xor T}: one factor -1 per pair (i in S,
/// j in T) with i > j.
int monomial_sign(CliffordElement::Mask s, CliffordElement::Mask t);

} // namespace racktwist
