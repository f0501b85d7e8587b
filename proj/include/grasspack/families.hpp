#pragma once

#include <cstdint>
#include <string>

#include "grasspack/clifford.hpp"
#include "grasspack/fraction.hpp"
#include "grasspack/packing.hpp"
#include "grasspack/report.hpp"

namespace grasspack {

/// The three orbit families: line packings (seed e1), packings in G(m,2)
/// (seed span(e1,e2)) and packings in G(m,m/4) (seed the first m/4
/// coordinate vectors).
enum class OrbitFamily { lines, planes_2, quarter };

std::string family_name(OrbitFamily f);

/// Predicted count and minimal squared distance at level i (m = 2^i).
/// The planes_2 and quarter formulas are conjectural; orbit enumeration is
/// the oracle that confirms them level by level.
struct FamilyClaim {
    OrbitFamily name;
    int level;
    BigInt predicted_count;
    Fraction predicted_min_d2;
    bool conjectured;
};

FamilyClaim predict(OrbitFamily f, int level);

/// Orbit of the family's seed subspace under the level-i group.
Packing realize(OrbitFamily f, int level, std::uint64_t limit = 0);

/// Compares realize() against predict(): exact count, exact minimal squared
/// distance, full histogram. Conjectured families are labeled
/// "computationally confirmed at this level", never proved. A mismatch is a
/// reported failure, not a crash.
VerificationReport check_family(OrbitFamily f, int level, int threads = 0,
                                std::uint64_t limit = 0);

}  // namespace grasspack
