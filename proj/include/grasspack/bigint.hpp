#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <functional>

namespace grasspack {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned k) {
    BigInt r = 1;
    r <<= k;
    return r;
}

inline bool is_even(const BigInt& x) { return !boost::multiprecision::bit_test(x, 0); }

inline bool is_power_of_two(const BigInt& x) {
    using boost::multiprecision::lsb;
    using boost::multiprecision::msb;
    return x > 0 && lsb(x) == msb(x);
}

// Exponent of the largest power of two dividing x; x must be nonzero.
inline unsigned twoadic_valuation(const BigInt& x) {
    return boost::multiprecision::lsb(boost::multiprecision::abs(x));
}

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::size_t hash_bigint(const BigInt& x) { return std::hash<BigInt>{}(x); }

}  // namespace grasspack
