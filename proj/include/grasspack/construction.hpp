#pragma once

#include <cstdint>
#include <vector>

#include "grasspack/packing.hpp"
#include "grasspack/report.hpp"
#include "grasspack/scaled_matrix.hpp"

namespace grasspack {

/// Level-i family of signed monomial matrices of size 2^(i-1) x 2^(i-1),
/// built recursively from the four 2x2 signed patterns. |family| = 2^(2i-1).
struct MonomialFamily {
    int level;
    std::vector<ScaledIntMatrix> matrices;
};

MonomialFamily build_monomials(int level);

/// The recursive packing of 2^(2i) + 2^i - 2 half-dimensional subspaces of
/// R^(2^i). Member order is fixed: (I 0), (0 I), then diag(P,P) in level i-1
/// order, then diag(P,P-complement), then (I Q) in monomial order.
struct ConstructionFamily {
    int level;
    Packing packing;
};

ConstructionFamily build_family(int level);

enum class SweepMode {
    automatic,   // exhaustive through level 5, transitive above
    exhaustive,  // all pairs, exact
    transitive,  // distances from one representative, justified by a
                 // machine-checked transitivity certificate
};

/// Checks the family's count against both closed forms, the two-valued
/// distance spectrum {m/4, m/2}, minimality at the Rankin bound, and (on a
/// sample of pairs; all pairs through level 3) the three admissible
/// principal-angle spectra.
VerificationReport verify_theorem(int level, SweepMode mode = SweepMode::automatic,
                                  int threads = 0);

}  // namespace grasspack
