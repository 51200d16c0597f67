#pragma once

#include <gmpxx.h>

#include <string>

namespace racktwist {

/// Exact element a + b√2 of Q(√2).
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(mpq_class a, mpq_class b = 0) : a_(std::move(a)), b_(std::move(b))
    {
        a_.canonicalize();
        b_.canonicalize();
    }
    QuadScalar(long a) : a_(a), b_(0) {}

    static QuadScalar sqrt2() { return QuadScalar(0, 1); }
    /// 1/√2 = √2/2.
    static QuadScalar inv_sqrt2() { return QuadScalar(0, mpq_class(1, 2)); }

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& sqrt2_part() const { return b_; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    QuadScalar operator-() const { return QuadScalar(-a_, -b_); }
    QuadScalar& operator+=(const QuadScalar& o)
    {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadScalar& operator-=(const QuadScalar& o)
    {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadScalar& operator*=(const QuadScalar& o)
    {
        mpq_class a = a_ * o.a_ + 2 * b_ * o.b_;
        mpq_class b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }

    friend QuadScalar operator+(QuadScalar l, const QuadScalar& r) { return l += r; }
    friend QuadScalar operator-(QuadScalar l, const QuadScalar& r) { return l -= r; }
    friend QuadScalar operator*(QuadScalar l, const QuadScalar& r) { return l *= r; }
    friend bool operator==(const QuadScalar& l, const QuadScalar& r) { return l.a_ == r.a_ && l.b_ == r.b_; }

    std::string to_string() const;

private:
    mpq_class a_;
    mpq_class b_;
};

} // namespace racktwist
