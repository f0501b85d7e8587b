#pragma once

#include <cstddef>
#include <vector>

#include "grasspack/dyadic.hpp"
#include "grasspack/rational_matrix.hpp"
#include "grasspack/scaled_matrix.hpp"

namespace grasspack {

/// An n-dimensional subspace of R^m, held as a row-generator matrix together
/// with its exact orthogonal projector. The projector is the identity of the
/// subspace: generator matrices are non-unique, so equality, hashing and
/// deduplication all go through the projector.
class Subspace {
public:
    /// Builds the projector G^T (G G^T)^-1 G exactly. When the generator has
    /// pairwise-orthogonal rows (the common case here) the projector is
    /// assembled as sum_r (r r^T) / (r.r); otherwise a fraction-free solve is
    /// used. Throws rank_error for rank-deficient generators and ring_error
    /// if the projector would leave the dyadic ring.
    explicit Subspace(const ScaledIntMatrix& generator);

    int ambient_dim() const { return generator_.cols(); }
    int dim() const { return generator_.rows(); }

    const ScaledIntMatrix& generator() const { return generator_; }
    const RationalMatrix& projector() const { return projector_; }

    /// Projector as integer matrix / 2^exp with minimal exp.
    const RationalMatrix::ScaledView& scaled_projector() const { return scaled_; }

    bool operator==(const Subspace& o) const {
        return hash_ == o.hash_ && scaled_.exp2 == o.scaled_.exp2 &&
               scaled_.entries == o.scaled_.entries;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    std::size_t hash() const { return hash_; }

private:
    ScaledIntMatrix generator_;
    RationalMatrix projector_;
    RationalMatrix::ScaledView scaled_;
    std::size_t hash_;
};

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

/// The subspace orthogonal to p: projector I - P, generator from the exact
/// kernel of p's generator (primitive integer rows).
Subspace orthogonal_complement(const Subspace& p);

/// Exact squared chordal distance n - tr(P Q). With assertions enabled every
/// call cross-checks the independent route (1/2) * ||P - Q||_F^2.
Dyadic squared_distance(const Subspace& p, const Subspace& q);

/// Right action on the generator matrix: subspace spanned by rows of G * g.
Subspace act(const Subspace& s, const ScaledIntMatrix& g);

}  // namespace grasspack
