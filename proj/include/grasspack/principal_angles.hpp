#pragma once

#include <vector>

#include "grasspack/dyadic.hpp"
#include "grasspack/subspace.hpp"

namespace grasspack {

/// Principal angles between two subspaces of the same Grassmannian.
/// cos_squared holds the exact spectrum (sorted ascending); angles are the
/// derived floating-point values in radians.
struct PrincipalAngles {
    std::vector<Dyadic> cos_squared;
    std::vector<double> angles;
};

enum class SpectrumCheck {
    confirmed,  // candidate multiset matches all exact power sums
    rejected,   // candidate is provably not the spectrum
};

/// Floating-point path: squared cosines of the principal angles via the
/// singular values of O_p O_q^T (orthonormalized bases). Sorted ascending.
/// Diagnostic channel only; never used to decide a verification.
std::vector<double> cos_sq_floating(const Subspace& p, const Subspace& q);

/// Exact path: test a hypothesized multiset of squared cosines by comparing
/// its power sums with tr((P Q)^k) for k = 1..n. A mismatch is a proof that
/// the candidate is wrong, reported as `rejected` (distinct from any numeric
/// failure, which throws).
SpectrumCheck confirm_cos_sq_spectrum(const Subspace& p, const Subspace& q,
                                      const std::vector<Dyadic>& candidate);

/// Full computation: the floating path proposes a dyadic spectrum, the exact
/// path must confirm it. Throws error if no confirmable hypothesis is found.
PrincipalAngles principal_angles(const Subspace& p, const Subspace& q);

}  // namespace grasspack
