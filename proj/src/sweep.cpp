#include "grasspack/sweep.hpp"

#include <cassert>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "grasspack/errors.hpp"

namespace grasspack {

namespace {

void merge_into(PairStats& into, const PairStats& part) {
    if (part.pair_count == 0) return;
    if (into.pair_count == 0 || part.min_d2 < into.min_d2) into.min_d2 = part.min_d2;
    for (const auto& [d2, n] : part.histogram) into.histogram[d2] += n;
    into.pair_count += part.pair_count;
}

// Decode flattened pair index k -> (i, j), i < j, rows enumerated in order
// (0,1), (0,2), ..., (1,2), ...
inline void decode_pair(std::uint64_t k, std::uint64_t n, std::uint64_t& i, std::uint64_t& j) {
    // Row r covers indices [r(n-1) - r(r-1)/2, ...); estimate then correct.
    auto block_start = [n](std::uint64_t r) { return r * (n - 1) - r * (r - 1) / 2; };
    double b = 2.0 * static_cast<double>(n) - 1.0;
    double disc = b * b - 8.0 * static_cast<double>(k);
    if (disc < 0) disc = 0;
    std::uint64_t row = static_cast<std::uint64_t>((b - std::sqrt(disc)) / 2.0);
    if (row > n - 2) row = n - 2;
    while (row > 0 && block_start(row) > k) --row;
    while (row + 1 <= n - 2 && block_start(row + 1) <= k) ++row;
    i = row;
    j = k - block_start(row) + row + 1;
}

}  // namespace

PairStats pair_sweep_serial(const std::vector<Subspace>& members) {
    PairStats stats;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            Dyadic d2 = squared_distance(members[i], members[j]);
            if (stats.pair_count == 0 || d2 < stats.min_d2) stats.min_d2 = d2;
            ++stats.histogram[d2];
            ++stats.pair_count;
        }
    return stats;
}

PairStats pair_sweep_parallel(const std::vector<Subspace>& members, int threads) {
    const std::uint64_t n = members.size();
    if (n < 2) return {};
    const int dim = members[0].dim();

    // Bring every projector to one common power-of-two denominator so the
    // inner loop is pure integer arithmetic.
    unsigned exp = 0;
    for (const auto& s : members) exp = std::max(exp, s.scaled_projector().exp2);
    std::vector<std::vector<BigInt>> scaled(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto& view = members[i].scaled_projector();
        scaled[i] = view.entries;
        const unsigned shift = exp - view.exp2;
        if (shift)
            for (BigInt& e : scaled[i]) e <<= shift;
    }
    const std::size_t cells = scaled[0].size();
    const BigInt denom = pow2(2 * exp);              // 2^exp squared
    const BigInt dim_scaled = BigInt(dim) * denom;   // n * 2^(2 exp)

    const std::uint64_t pairs = n * (n - 1) / 2;
    PairStats total;

    const int dim_m = members[0].ambient_dim();

    // Histogram values are few; accumulate into a flat list and only build
    // the ordered map when merging.
    struct FlatStats {
        std::vector<std::pair<Dyadic, std::uint64_t>> counts;
        void bump(const Dyadic& d2) {
            for (auto& [v, c] : counts)
                if (v == d2) {
                    ++c;
                    return;
                }
            counts.emplace_back(d2, 1);
        }
        PairStats to_stats() const {
            PairStats s;
            for (const auto& [v, c] : counts) {
                s.histogram[v] += c;
                s.pair_count += c;
            }
            if (s.pair_count) s.min_d2 = s.histogram.begin()->first;
            return s;
        }
    };

    // Both operands are symmetric: tr(AB) = sum_i A_ii B_ii + 2 sum_{i<j} A_ij B_ij.
    auto pair_d2 = [&](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
        BigInt tr = 0;
        for (int r = 0; r < dim_m; ++r) {
            const std::size_t row = static_cast<std::size_t>(r) * dim_m;
            BigInt off = 0;
            for (int c = r + 1; c < dim_m; ++c) {
                if (a[row + c].is_zero() || b[row + c].is_zero()) continue;
                off += a[row + c] * b[row + c];
            }
            tr += off << 1;
            if (!a[row + r].is_zero() && !b[row + r].is_zero()) tr += a[row + r] * b[row + r];
        }
        Dyadic d2 = Dyadic(dim_scaled - tr, 2 * exp);
#ifndef NDEBUG
        {
            BigInt frob = 0;
            for (int r = 0; r < dim_m; ++r) {
                const std::size_t row = static_cast<std::size_t>(r) * dim_m;
                BigInt off = 0;
                for (int c = r + 1; c < dim_m; ++c) {
                    BigInt d = a[row + c] - b[row + c];
                    if (!d.is_zero()) off += d * d;
                }
                frob += off << 1;
                BigInt dd = a[row + r] - b[row + r];
                if (!dd.is_zero()) frob += dd * dd;
            }
            assert(d2 == Dyadic(frob, 2 * exp + 1));
        }
#endif
        return d2;
    };

#ifdef _OPENMP
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nt)
    {
        FlatStats local;
#pragma omp for schedule(dynamic, 512) nowait
        for (long long k = 0; k < static_cast<long long>(pairs); ++k) {
            std::uint64_t i, j;
            decode_pair(static_cast<std::uint64_t>(k), n, i, j);
            local.bump(pair_d2(scaled[i], scaled[j]));
        }
        PairStats part = local.to_stats();
#pragma omp critical(grasspack_sweep_merge)
        merge_into(total, part);
    }
#else
    (void)threads;
    FlatStats local;
    for (std::uint64_t k = 0; k < pairs; ++k) {
        std::uint64_t i, j;
        decode_pair(k, n, i, j);
        local.bump(pair_d2(scaled[i], scaled[j]));
    }
    total = local.to_stats();
#endif
    return total;
}

}  // namespace grasspack
