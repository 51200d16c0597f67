#include "racktwist/clifford.hpp"

#include "racktwist/errors.hpp"

#include <bit>
#include <sstream>

namespace racktwist {

std::string QuadScalar::to_string() const
{
    std::ostringstream os;
    if (sgn(b_) == 0) {
        os << a_;
    } else if (sgn(a_) == 0) {
        os << b_ << "*sqrt2";
    } else {
        os << a_ << (sgn(b_) > 0 ? "+" : "") << b_ << "*sqrt2";
    }
    return os.str();
}

int monomial_sign(CliffordElement::Mask s, CliffordElement::Mask t)
{
    int swaps = 0;
    for (CliffordElement::Mask rest = t; rest != 0; rest &= rest - 1) {
        const CliffordElement::Mask low = rest & (~rest + 1);
        // generators of s strictly above this generator of t
        swaps += std::popcount(s & ~((low << 1) - 1));
    }
    return (swaps & 1) ? -1 : 1;
}

CliffordElement::CliffordElement(int n) : n_(n)
{
    if (n < 0 || n > kMaxGenerators)
        throw InvalidArgument("Clifford algebra dimension out of range");
}

CliffordElement CliffordElement::scalar(int n, const QuadScalar& c)
{
    CliffordElement e(n);
    e.add_term(0, c);
    return e;
}

CliffordElement CliffordElement::basis_vector(int n, int i)
{
    if (i < 1 || i > n)
        throw InvalidArgument("basis vector index out of range");
    CliffordElement e(n);
    e.add_term(Mask{1} << (i - 1), QuadScalar(1));
    return e;
}

QuadScalar CliffordElement::coefficient(Mask m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? QuadScalar() : it->second;
}

void CliffordElement::add_term(Mask m, const QuadScalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

CliffordElement CliffordElement::reverse() const
{
    CliffordElement out(n_);
    for (const auto& [m, c] : terms_) {
        const int k = std::popcount(m);
        out.terms_.emplace(m, ((k * (k - 1) / 2) & 1) ? -c : c);
    }
    return out;
}

bool CliffordElement::is_parity_homogeneous() const
{
    if (terms_.empty())
        return true;
    const int parity = std::popcount(terms_.begin()->first) & 1;
    for (const auto& [m, c] : terms_)
        if ((std::popcount(m) & 1) != parity)
            return false;
    return true;
}

CliffordElement CliffordElement::operator-() const
{
    CliffordElement out(n_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

CliffordElement operator+(const CliffordElement& a, const CliffordElement& b)
{
    if (a.n_ != b.n_)
        throw MismatchError("Clifford dimension mismatch");
    CliffordElement out = a;
    for (const auto& [m, c] : b.terms_)
        out.add_term(m, c);
    return out;
}

CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) { return a + (-b); }

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b)
{
    if (a.n_ != b.n_)
        throw MismatchError("Clifford dimension mismatch");
    CliffordElement out(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            QuadScalar c = ca * cb;
            if (monomial_sign(ma, mb) < 0)
                c = -c;
            out.add_term(ma ^ mb, c);
        }
    return out;
}

CliffordElement operator*(const QuadScalar& c, const CliffordElement& a)
{
    CliffordElement out(a.n_);
    if (c.is_zero())
        return out;
    for (const auto& [m, v] : a.terms_)
        out.terms_.emplace(m, c * v);
    return out;
}

std::string CliffordElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << '(' << c.to_string() << ')';
        for (int i = 0; i < n_; ++i)
            if (m & (Mask{1} << i))
                os << "*e" << (i + 1);
    }
    return os.str();
}

} // namespace racktwist
