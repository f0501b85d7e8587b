#pragma once

#include <cstddef>
#include <string>

#include "grasspack/bigint.hpp"
#include "grasspack/errors.hpp"

namespace grasspack {

/// Exact dyadic rational: numerator / 2^exponent.
///
/// Canonical form keeps the exponent minimal: the numerator is odd whenever
/// the exponent is positive, and zero is stored as 0 / 2^0. Closed under
/// addition, subtraction and multiplication; equality is structural.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long long n) : num_(n), exp_(0) {}  // NOLINT: implicit on purpose
    Dyadic(BigInt numerator, unsigned exponent) : num_(std::move(numerator)), exp_(exponent) {
        canonicalize();
    }

    // p / q with q = +/- 2^t; throws ring_error for any other denominator.
    static Dyadic from_fraction(BigInt p, BigInt q);

    const BigInt& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return exp_ == 0; }
    bool is_one() const { return exp_ == 0 && num_ == 1; }
    int sign() const { return num_.sign(); }

    Dyadic operator-() const { return Dyadic(-num_, exp_); }
    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
    Dyadic operator*(const Dyadic& o) const { return Dyadic(num_ * o.num_, exp_ + o.exp_); }
    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
    Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
    Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

    bool operator==(const Dyadic& o) const { return exp_ == o.exp_ && num_ == o.num_; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }
    bool operator<(const Dyadic& o) const;
    bool operator<=(const Dyadic& o) const { return !(o < *this); }
    bool operator>(const Dyadic& o) const { return o < *this; }
    bool operator>=(const Dyadic& o) const { return !(*this < o); }

    double to_double() const;

    /// "p" for integers, "p/q" otherwise (q a power of two).
    std::string str() const;

    std::size_t hash() const { return hash_combine(hash_bigint(num_), exp_); }

private:
    void canonicalize();

    BigInt num_;
    unsigned exp_;
};

inline Dyadic operator*(long long a, const Dyadic& d) { return Dyadic(a) * d; }

struct DyadicHash {
    std::size_t operator()(const Dyadic& d) const { return d.hash(); }
};

}  // namespace grasspack
