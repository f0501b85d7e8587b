#include "grasspack/dyadic.hpp"

#include <cmath>

namespace grasspack {

void Dyadic::canonicalize() {
    if (num_.is_zero()) {
        exp_ = 0;
        return;
    }
    if (exp_ == 0) return;
    unsigned v = twoadic_valuation(num_);
    unsigned shift = v < exp_ ? v : exp_;
    if (shift > 0) {
        num_ >>= shift;
        exp_ -= shift;
    }
}

Dyadic Dyadic::from_fraction(BigInt p, BigInt q) {
    if (q.is_zero()) throw ring_error("dyadic: division by zero");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (p.is_zero()) return Dyadic();
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(p), q);
    p /= g;
    q /= g;
    if (!is_power_of_two(q) && q != 1)
        throw ring_error("dyadic: denominator " + q.str() + " is not a power of two");
    unsigned e = (q == 1) ? 0 : boost::multiprecision::lsb(q);
    return Dyadic(std::move(p), e);
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    if (exp_ == o.exp_) return Dyadic(num_ + o.num_, exp_);
    if (exp_ > o.exp_) return Dyadic(num_ + (o.num_ << (exp_ - o.exp_)), exp_);
    return Dyadic((num_ << (o.exp_ - exp_)) + o.num_, o.exp_);
}

bool Dyadic::operator<(const Dyadic& o) const {
    // Compare p/2^a with r/2^b by cross-scaling to the common exponent.
    if (exp_ == o.exp_) return num_ < o.num_;
    if (exp_ > o.exp_) return num_ < (o.num_ << (exp_ - o.exp_));
    return (num_ << (o.exp_ - exp_)) < o.num_;
}

double Dyadic::to_double() const {
    return std::ldexp(num_.convert_to<double>(), -static_cast<int>(exp_));
}

std::string Dyadic::str() const {
    if (exp_ == 0) return num_.str();
    return num_.str() + "/" + pow2(exp_).str();
}

}  // namespace grasspack
