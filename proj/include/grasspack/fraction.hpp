#pragma once

#include <string>

#include "grasspack/bigint.hpp"
#include "grasspack/dyadic.hpp"
#include "grasspack/errors.hpp"

namespace grasspack {

/// Reduced rational with arbitrary denominator. Used for scalar quantities
/// whose denominator need not be a power of two (e.g. the Rankin bound
/// n(m-n)/m); matrix entries stay dyadic.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(long long n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
    Fraction(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    Fraction(const Dyadic& d) : num_(d.numerator()), den_(pow2(d.exponent())) {}  // NOLINT

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    Fraction operator-() const;
    Fraction operator+(const Fraction& o) const {
        return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Fraction operator-(const Fraction& o) const {
        return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Fraction operator*(const Fraction& o) const { return Fraction(num_ * o.num_, den_ * o.den_); }

    bool operator==(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Fraction& o) const { return !(*this == o); }
    bool operator<(const Fraction& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Fraction& o) const { return !(o < *this); }
    bool operator>(const Fraction& o) const { return o < *this; }
    bool operator>=(const Fraction& o) const { return !(*this < o); }

    double to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const { return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str(); }

private:
    void reduce();

    BigInt num_;
    BigInt den_;  // > 0
};

}  // namespace grasspack
