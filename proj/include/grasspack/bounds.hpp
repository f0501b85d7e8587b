#pragma once

#include "grasspack/fraction.hpp"

namespace grasspack {

/// Rankin/orthoplex bound on the squared packing distance in G(m,n):
/// n(m-n)/m, exactly.
Fraction rankin_bound(int m, int n);

struct BoundApplicability {
    bool applicable;        // N exceeds m(m+1)/2, so the bound is in force
    bool equality_possible; // N <= (m-1)(m+2), necessary for meeting it
};

BoundApplicability bound_applicability(int m, int n, const BigInt& count);

}  // namespace grasspack
