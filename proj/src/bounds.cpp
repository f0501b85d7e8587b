#include "grasspack/bounds.hpp"

#include "grasspack/errors.hpp"

namespace grasspack {

Fraction rankin_bound(int m, int n) {
    if (n <= 0 || m <= n) throw dimension_error("rankin_bound: need 0 < n < m");
    return Fraction(BigInt(n) * (m - n), BigInt(m));
}

BoundApplicability bound_applicability(int m, int n, const BigInt& count) {
    (void)n;
    BigInt half_dim = BigInt(m) * (m + 1) / 2;
    BigInt equality_cap = BigInt(m - 1) * (m + 2);
    return BoundApplicability{count > half_dim, count <= equality_cap};
}

}  // namespace grasspack
