#include "grasspack/fraction.hpp"

namespace grasspack {

void Fraction::reduce() {
    if (den_.is_zero()) throw error("fraction: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Fraction Fraction::operator-() const {
    Fraction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

}  // namespace grasspack
