#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "grasspack/report.hpp"
#include "grasspack/subspace.hpp"

namespace grasspack {

/// Exact pairwise squared-distance statistics of a packing.
struct PairStats {
    Dyadic min_d2;
    std::map<Dyadic, std::uint64_t> histogram;  // d^2 -> number of pairs
    std::uint64_t pair_count = 0;
};

/// A finite set of equi-dimensional subspaces. Members are ordered (the
/// construction/discovery order) and duplicate projectors are an error.
class Packing {
public:
    Packing(int ambient_dim, int dim, std::vector<Subspace> members);

    int ambient_dim() const { return m_; }
    int dim() const { return n_; }
    std::size_t size() const { return members_.size(); }
    const Subspace& at(std::size_t idx) const { return members_.at(idx); }
    const std::vector<Subspace>& members() const { return members_; }

    bool contains(const Subspace& s) const;
    std::size_t index_of(const Subspace& s) const;  // npos if absent
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Exact pairwise statistics; computed on first use and cached.
    /// threads = 0 uses the OpenMP default.
    const PairStats& stats(int threads = 0) const;

    /// Count, exact minimum squared distance, full histogram and the
    /// Rankin-bound comparison. Requires at least 2 subspaces.
    VerificationReport report(int threads = 0) const;

private:
    int m_, n_;
    std::vector<Subspace> members_;
    std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash_;
    mutable std::shared_ptr<const PairStats> stats_;
};

}  // namespace grasspack
