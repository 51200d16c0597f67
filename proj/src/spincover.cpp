#include "racktwist/spincover.hpp"

#include <algorithm>
#include <random>

namespace racktwist {
namespace {

void require_n(int n, int lo, int hi, const char* what)
{
    if (n < lo || n > hi)
        throw InvalidArgument(std::string(what) + ": n=" + std::to_string(n) + " outside [" + std::to_string(lo) +
                              ", " + std::to_string(hi) + "]");
}

SpinElement power(const SpinElement& a, int k)
{
    SpinElement out = SpinElement::identity(a.n());
    for (int i = 0; i < k; ++i)
        out = out * a;
    return out;
}

} // namespace

SpinElement::SpinElement(CliffordElement elem, Permutation perm) : elem_(std::move(elem)), perm_(std::move(perm))
{
    if (elem_.dimension() != perm_.size())
        throw MismatchError("Clifford dimension and permutation degree differ");
}

SpinElement SpinElement::identity(int n)
{
    return SpinElement(CliffordElement::scalar(n, QuadScalar(1)), Permutation::identity(n));
}

SpinElement SpinElement::z(int n)
{
    return SpinElement(CliffordElement::scalar(n, QuadScalar(-1)), Permutation::identity(n));
}

SpinElement SpinElement::inverse() const { return SpinElement(elem_.reverse(), perm_.inverse()); }

SpinElement operator*(const SpinElement& a, const SpinElement& b)
{
    return SpinElement(a.elem_ * b.elem_, a.perm_ * b.perm_);
}

SpinElement conjugate(const SpinElement& a, const SpinElement& t) { return a * t * a.inverse(); }

CheckResult check_spin_invariants(const SpinElement& t)
{
    const int n = t.n();
    if (!(t.elem() * t.elem().reverse() == CliffordElement::scalar(n, QuadScalar(1))))
        return CheckResult::fail(0, 0, 0, "elem * reverse(elem) != 1");
    if (!t.elem().is_parity_homogeneous())
        return CheckResult::fail(0, 0, 0, "element is not parity-homogeneous");
    const CliffordElement rev = t.elem().reverse();
    for (int i = 1; i <= n; ++i) {
        const CliffordElement image = t.elem() * CliffordElement::basis_vector(n, i) * rev;
        const CliffordElement target = CliffordElement::basis_vector(n, t.perm()(i));
        if (!(image == target) && !(image == -target))
            return CheckResult::fail(static_cast<std::size_t>(i), 0, 0,
                                     "conjugation does not send e_i to ±e_perm(i)");
    }
    return CheckResult::pass();
}

SpinElement generator_t(int n, int i)
{
    require_n(n, 2, CliffordElement::kMaxGenerators, "generator_t");
    if (i < 1 || i >= n)
        throw InvalidArgument("generator index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
    const CliffordElement v = CliffordElement::basis_vector(n, i) - CliffordElement::basis_vector(n, i + 1);
    return SpinElement(QuadScalar::inv_sqrt2() * v, Permutation::adjacent(n, i));
}

PresentationReport verify_presentation(int n, const GeneratorFactory& generators)
{
    require_n(n, 2, kDefaultCoverCap, "verify_presentation");
    PresentationReport report;
    const SpinElement one = SpinElement::identity(n);
    const SpinElement z = SpinElement::z(n);
    auto expect = [&](const SpinElement& lhs, const SpinElement& rhs, const std::string& name) {
        ++report.relations_checked;
        if (!(lhs == rhs) && report.ok) {
            report.ok = false;
            report.first_failure = name;
        }
    };

    std::vector<SpinElement> t;
    for (int i = 1; i < n; ++i)
        t.push_back(generators(n, i));

    for (int i = 1; i < n; ++i)
        expect(t[i - 1] * t[i - 1], one, "t_" + std::to_string(i) + "^2 = 1");
    for (int j = 1; j + 1 < n; ++j)
        expect(power(t[j - 1] * t[j], 3), one,
               "(t_" + std::to_string(j) + " t_" + std::to_string(j + 1) + ")^3 = 1");
    for (int k = 1; k < n; ++k)
        for (int l = k + 2; l < n; ++l)
            expect(power(t[k - 1] * t[l - 1], 2), z,
                   "(t_" + std::to_string(k) + " t_" + std::to_string(l) + ")^2 = z");
    expect(z * z, one, "z^2 = 1");
    for (int i = 1; i < n; ++i)
        expect(z * t[i - 1], t[i - 1] * z, "[z, t_" + std::to_string(i) + "] = 1");
    return report;
}

SpinElement lift_word(int n, std::span<const int> word)
{
    SpinElement out = SpinElement::identity(n);
    for (int k : word)
        out = out * generator_t(n, k);
    return out;
}

SpinElement lift(const Permutation& sigma)
{
    const auto word = reduced_word(sigma);
    return lift_word(sigma.size(), word);
}

SpinElement bracket(int n, int i, int j)
{
    require_n(n, 2, CliffordElement::kMaxGenerators, "bracket");
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw InvalidArgument("bracket [" + std::to_string(i) + " " + std::to_string(j) + "] out of range");
    if (i > j)
        return bracket(n, j, i).times_z();
    if (j == i + 1)
        return generator_t(n, i);
    return conjugate(generator_t(n, i), bracket(n, i + 1, j)).times_z();
}

SpinElement conj_by_perm(const Permutation& sigma, const SpinElement& t)
{
    if (sigma.size() != t.n())
        throw MismatchError("conj_by_perm: degree mismatch");
    return conjugate(lift(sigma), t);
}

LemmaReport verify_conjugation_lemmas(int n, std::size_t trials, std::uint64_t seed, int max_word_length)
{
    require_n(n, 2, kDefaultCoverCap, "verify_conjugation_lemmas");
    LemmaReport report;

    std::vector<SpinElement> brackets;
    auto bracket_at = [&](int i, int j) -> const SpinElement& {
        return brackets[static_cast<std::size_t>((i - 1) * n + (j - 1))];
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            brackets.push_back(i == j ? SpinElement::identity(n) : bracket(n, i, j));

    for (int k = 1; k < n; ++k) {
        const SpinElement tk = generator_t(n, k);
        const Permutation sk = Permutation::adjacent(n, k);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j)
                    continue;
                ++report.general_cases;
                if (!(conjugate(tk, bracket_at(i, j)) == bracket_at(sk(i), sk(j)).times_z()) && report.general_ok) {
                    report.general_ok = false;
                    report.first_failure = "s_" + std::to_string(k) + " |> [" + std::to_string(i) + " " +
                                           std::to_string(j) + "]";
                }
            }
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> length_dist(0, max_word_length);
    std::uniform_int_distribution<int> letter_dist(1, n - 1);
    std::uniform_int_distribution<int> point_dist(1, n);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<int> word(static_cast<std::size_t>(length_dist(rng)));
        for (auto& k : word)
            k = letter_dist(rng);
        const int i = point_dist(rng);
        int j = point_dist(rng);
        while (j == i)
            j = point_dist(rng);

        const Permutation sigma = Permutation::from_word(n, word);
        SpinElement expected = bracket_at(sigma(i), sigma(j));
        if (word.size() % 2 == 1)
            expected = expected.times_z();
        ++report.proposition_cases;
        if (!(conjugate(lift_word(n, word), bracket_at(i, j)) == expected) && report.proposition_ok) {
            report.proposition_ok = false;
            report.first_failure = "random word of length " + std::to_string(word.size()) + " on [" +
                                   std::to_string(i) + " " + std::to_string(j) + "]";
        }
    }
    return report;
}

Section::Section(int n, int cap) : n_(n) { require_n(n, 2, cap, "Section"); }

const SpinElement& Section::operator()(const Permutation& sigma)
{
    if (sigma.size() != n_)
        throw MismatchError("section: degree mismatch");
    auto it = cache_.find(sigma);
    if (it != cache_.end())
        return it->second;
    return cache_.emplace(sigma, section_s(sigma)).first->second;
}

int Section::phi(const Permutation& x, const Permutation& y)
{
    const SpinElement product = (*this)(x) * (*this)(y);
    const SpinElement& target = (*this)(x * y);
    if (product == target)
        return 0;
    if (product.elem() == -target.elem())
        return 1;
    throw InternalError("s(x)s(y) is neither s(xy) nor z s(xy) for x=" + x.to_string() + ", y=" + y.to_string());
}

SpinElement section_s(const Permutation& sigma)
{
    if (sigma.is_identity())
        return SpinElement::identity(sigma.size());
    if (auto t = sigma.as_transposition())
        return bracket(sigma.size(), t->first, t->second);
    return lift(sigma);
}

GroupCocycleBit::GroupCocycleBit(int n) : n_(n), elements_(all_permutations(n))
{
    require_n(n, 2, kMaxTabulatedN, "GroupCocycleBit");
    const std::size_t g = elements_.size();
    mult_.resize(g * g);
    table_.resize(g * g);
    Section s(n);
    for (std::size_t x = 0; x < g; ++x)
        for (std::size_t y = 0; y < g; ++y) {
            mult_[x * g + y] = static_cast<std::uint32_t>(index_of(elements_[x] * elements_[y]));
            table_[x * g + y] = static_cast<std::uint8_t>(s.phi(elements_[x], elements_[y]));
        }
}

std::size_t GroupCocycleBit::index_of(const Permutation& p) const
{
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p)
        throw InvalidArgument("permutation not in S_n");
    return static_cast<std::size_t>(it - elements_.begin());
}

CheckResult GroupCocycleBit::verify_group_cocycle() const
{
    const std::size_t g = elements_.size();
    for (std::size_t x = 0; x < g; ++x)
        for (std::size_t y = 0; y < g; ++y) {
            const std::size_t xy = mult_[x * g + y];
            for (std::size_t z = 0; z < g; ++z) {
                const std::size_t yz = mult_[y * g + z];
                if (((table_[x * g + y] + table_[xy * g + z]) ^ (table_[x * g + yz] + table_[y * g + z])) & 1)
                    return CheckResult::fail(x, y, z, "group 2-cocycle identity fails");
            }
        }
    return CheckResult::pass();
}

std::size_t GroupCocycleBit::triples_checked() const
{
    const std::size_t g = elements_.size();
    return g * g * g;
}

TwistTable phi_psi_restriction(const TranspositionRack& xn, Section& section)
{
    if (section.n() != xn.n)
        throw MismatchError("section and rack degrees differ");
    const std::size_t k = xn.pairs.size();
    std::vector<Permutation> elems;
    for (std::size_t x = 0; x < k; ++x)
        elems.push_back(xn.element(x));
    std::vector<std::uint32_t> phi(k * k);
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            phi[x * k + y] = static_cast<std::uint32_t>(section.phi(elems[x], elems[y]));
    return TwistTable(xn.rack, 2, std::move(phi));
}

TwistTable phi_psi_restriction(const TranspositionRack& xn)
{
    Section section(xn.n);
    return phi_psi_restriction(xn, section);
}

MainTheoremReport verify_main_theorem(int n)
{
    require_n(n, 4, kDefaultCoverCap, "verify_main_theorem");
    MainTheoremReport report;
    report.n = n;
    const TranspositionRack xn = transposition_rack(n);
    const RackCocycle chi = chi_cocycle(xn);
    const TwistTable phi = phi_psi_restriction(xn);
    const auto& r = *xn.rack;
    const std::size_t k = r.size();

    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t) {
            PairLog entry{s, t, static_cast<int>(phi(s, t)), static_cast<int>(phi(r.op(s, t), s)),
                          static_cast<int>(chi(s, t)), false};
            // (-1)^{a} (-1)^{-b} (-1)^{c} == -1  <=>  a - b + c odd
            entry.ok = ((entry.phi_sigma_tau - entry.phi_conj_sigma + entry.chi) % 2 + 2) % 2 == 1;
            ++report.pairs_checked;
            if (!entry.ok && report.ok) {
                report.ok = false;
                report.first_failure = "sigma=" + r.label(s) + ", tau=" + r.label(t);
            }
            report.log.push_back(entry);
        }

    report.twist_equals_minus_one = twist(chi, phi) == constant_cocycle(xn.rack, 2, 1);
    report.ok = report.ok && report.twist_equals_minus_one;
    if (!report.twist_equals_minus_one && report.first_failure.empty())
        report.first_failure = "twist(chi, phi_psi) differs from the constant cocycle -1";
    return report;
}

} // namespace racktwist
