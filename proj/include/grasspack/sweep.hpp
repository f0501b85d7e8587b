#pragma once

#include <vector>

#include "grasspack/packing.hpp"

namespace grasspack {

/// Serial reference sweep: straight loop over pairs through the public
/// squared_distance route. Kept as the baseline the parallel kernel is
/// tested against.
PairStats pair_sweep_serial(const std::vector<Subspace>& members);

/// OpenMP sweep over the flattened pair index. Works on pre-scaled integer
/// projector views; exact arithmetic, so the result is independent of
/// scheduling and thread count. threads = 0 uses the OpenMP default.
PairStats pair_sweep_parallel(const std::vector<Subspace>& members, int threads = 0);

}  // namespace grasspack
