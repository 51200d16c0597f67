#pragma once

#include "racktwist/clifford.hpp"
#include "racktwist/cocycle.hpp"
#include "racktwist/errors.hpp"
#include "racktwist/permutation.hpp"
#include "racktwist/rack.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace racktwist {

/// Default largest n for the Clifford model of T_n.
inline constexpr int kDefaultCoverCap = 12;

/// Element of the double cover T_n: a Clifford-algebra element together with
/// its image in S_n. The central involution z is the scalar -1.
class SpinElement {
public:
    SpinElement(CliffordElement elem, Permutation perm);

    static SpinElement identity(int n);
    static SpinElement z(int n);

    int n() const { return perm_.size(); }
    const CliffordElement& elem() const { return elem_; }
    /// The projection p: T_n -> S_n.
    const Permutation& perm() const { return perm_; }

    /// Inverse of a group element (its reversion).
    SpinElement inverse() const;
    SpinElement times_z() const { return SpinElement(-elem_, perm_); }

    friend SpinElement operator*(const SpinElement& a, const SpinElement& b);
    friend bool operator==(const SpinElement& a, const SpinElement& b)
    {
        return a.perm_ == b.perm_ && a.elem_ == b.elem_;
    }

private:
    CliffordElement elem_;
    Permutation perm_;
};

/// a ▷ t = a t a^{-1}.
SpinElement conjugate(const SpinElement& a, const SpinElement& t);

/// elem · reverse(elem) == 1, parity homogeneity, and conjugation sending each
/// e_i to ±e_{perm(i)}.
CheckResult check_spin_invariants(const SpinElement& t);

/// t_i = (e_i - e_{i+1}) / √2, lying over s_i.
SpinElement generator_t(int n, int i);

using GeneratorFactory = std::function<SpinElement(int n, int i)>;

struct PresentationReport {
    bool ok = true;
    std::size_t relations_checked = 0;
    std::string first_failure;
};

/// Checks t_i² = 1, (t_j t_{j+1})³ = 1, (t_k t_l)² = z for k <= l-2, z² = 1
/// and [z, t_i] = 1 with the given generators.
PresentationReport verify_presentation(int n, const GeneratorFactory& generators = generator_t);

/// Product of generators along a word: t_{w0} t_{w1} ...
SpinElement lift_word(int n, std::span<const int> word);
/// Lift of σ along its lexicographically smallest reduced word.
SpinElement lift(const Permutation& sigma);

/// The element [i j] of T_n.
SpinElement bracket(int n, int i, int j);

/// σ ▷ t computed with the reduced-word lift of σ.
SpinElement conj_by_perm(const Permutation& sigma, const SpinElement& t);

struct LemmaReport {
    bool general_ok = true;
    bool proposition_ok = true;
    std::size_t general_cases = 0;
    std::size_t proposition_cases = 0;
    std::string first_failure;
    bool ok() const { return general_ok && proposition_ok; }
};

/// s_k ▷ [i j] = [s_k(i) s_k(j)] z for all k, i != j; and for `trials` random
/// words of length <= max_word_length, σ ▷ [i j] = [σ(i) σ(j)] z^l.
LemmaReport verify_conjugation_lemmas(int n, std::size_t trials, std::uint64_t seed,
                                      int max_word_length = 20);

/// The section s: S_n -> T_n. s(id) = 1, s((i j)) = [i j] for i < j, and
/// the reduced-word lift otherwise. Results are memoized.
class Section {
public:
    explicit Section(int n, int cap = kDefaultCoverCap);

    int n() const { return n_; }
    const SpinElement& operator()(const Permutation& sigma);

    /// Exponent of z in s(x) s(y) = z^φ s(xy). Throws InternalError when
    /// s(x) s(y) is neither s(xy) nor -s(xy).
    int phi(const Permutation& x, const Permutation& y);

private:
    int n_;
    std::map<Permutation, SpinElement> cache_;
};

/// The section evaluated without memoization.
SpinElement section_s(const Permutation& sigma);

/// The group 2-cocycle φ: S_n x S_n -> <z> of the section, tabulated over all
/// of S_n (elements in lexicographic order). Bit b stands for z^b; its
/// scalar form under ψ(z) = -1 is (-1)^b.
class GroupCocycleBit {
public:
    static constexpr int kMaxTabulatedN = 6;

    explicit GroupCocycleBit(int n);

    int n() const { return n_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    std::size_t index_of(const Permutation& p) const;
    int bit(std::size_t x, std::size_t y) const { return table_[x * elements_.size() + y]; }
    int bit(const Permutation& x, const Permutation& y) const { return bit(index_of(x), index_of(y)); }
    /// φ_ψ(x, y) = ψ(z^bit) = ±1.
    int scalar(std::size_t x, std::size_t y) const { return bit(x, y) ? -1 : 1; }

    /// φ(x,y) + φ(xy,z) == φ(x,yz) + φ(y,z) (mod 2) over all triples.
    CheckResult verify_group_cocycle() const;
    std::size_t triples_checked() const;

private:
    int n_;
    std::vector<Permutation> elements_;
    std::vector<std::uint32_t> mult_;
    std::vector<std::uint8_t> table_;
};

/// φ_ψ restricted to X_n x X_n as an order-2 twist table (exponent = φ bit).
TwistTable phi_psi_restriction(const TranspositionRack& xn, Section& section);
TwistTable phi_psi_restriction(const TranspositionRack& xn);

struct PairLog {
    std::size_t sigma;
    std::size_t tau;
    int phi_sigma_tau;
    int phi_conj_sigma;
    int chi;
    bool ok;
};

struct MainTheoremReport {
    int n = 0;
    bool ok = true;
    bool twist_equals_minus_one = true;
    std::size_t pairs_checked = 0;
    std::vector<PairLog> log;
    std::string first_failure;
};

/// For every ordered pair of transpositions:
/// (-1)^{φ(σ,τ)} (-1)^{-φ(σ▷τ,σ)} χ(σ,τ) = -1, plus the equivalent statement
/// twist(χ, φ_ψ|X×X) == constant -1.
MainTheoremReport verify_main_theorem(int n);

} // namespace racktwist
