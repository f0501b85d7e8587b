#pragma once

#include <cstdint>
#include <vector>

#include "grasspack/bigint.hpp"

namespace grasspack {

using Perm = std::vector<std::uint32_t>;

/// Deterministic Schreier-Sims stabilizer chain over explicit permutations.
/// Base points are chosen greedily in domain order (smallest moved point).
/// Transversals store explicit inverse permutations while a global memory
/// budget lasts, then fall back to Schreier-vector tree walks.
class StabilizerChain {
public:
    explicit StabilizerChain(const std::vector<Perm>& generators);

    const BigInt& order() const { return order_; }
    const std::vector<std::uint32_t>& base() const { return base_; }
    const std::vector<std::size_t>& orbit_sizes() const { return orbit_sizes_; }

private:
    BigInt order_;
    std::vector<std::uint32_t> base_;
    std::vector<std::size_t> orbit_sizes_;
};

}  // namespace grasspack
