#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grasspack/packing.hpp"
#include "grasspack/report.hpp"
#include "grasspack/scaled_matrix.hpp"
#include "grasspack/subspace.hpp"

namespace grasspack {

/// An exact orthogonal matrix over Z[1/sqrt2], with an optional provenance
/// word (indices into the generator set that produce it).
class GroupElement {
public:
    explicit GroupElement(ScaledIntMatrix matrix, std::vector<int> word = {});

    const ScaledIntMatrix& matrix() const { return matrix_; }
    const std::vector<int>& word() const { return word_; }

    bool operator==(const GroupElement& o) const { return matrix_ == o.matrix_; }
    std::size_t hash() const { return matrix_.hash(); }

private:
    ScaledIntMatrix matrix_;
    std::vector<int> word_;
};

/// Named generating set of the level-i group acting on R^(2^i): the
/// translation x -> x + e1, two generators of GL(i,2) (a full cycle and one
/// transvection; both degenerate to the identity at i = 1), and the
/// block-diagonal Hadamard matrix H. Coordinates are indexed by binary
/// i-tuples in lexicographic order, first tuple entry most significant.
struct GeneratorSet {
    int level;
    std::vector<std::string> names;
    std::vector<GroupElement> elements;

    int dim() const { return 1 << level; }
};

GeneratorSet make_generators(int level);

/// Permutation matrix of the affine map x -> Ax + b on F_2^level.
/// `a` is a level x level bit matrix (row r, column c), `b` a bit vector.
ScaledIntMatrix affine_permutation(int level, const std::vector<std::vector<int>>& a,
                                   const std::vector<int>& b);

/// All 2^i x 2^i permutation matrices of affine maps (invertible A). Small
/// levels only; used to confirm the compact generating set reaches them.
std::vector<ScaledIntMatrix> all_affine_permutations(int level);

/// Breadth-first closure of the generator matrices under multiplication.
/// Oracle for group orders at small levels. Throws limit_error beyond limit.
std::vector<ScaledIntMatrix> matrix_group_closure(const GeneratorSet& gens, std::uint64_t limit);

/// Orbit of a subspace under the right action, breadth-first, deduplicated
/// by canonical projector. Discovery order is deterministic for a fixed
/// generator order, seed first.
struct OrbitResult {
    Subspace seed;
    Packing members;
    std::vector<std::vector<int>> words;  // per member: generator indices, applied in order
};

OrbitResult subspace_orbit(const Subspace& seed, const GeneratorSet& gens, std::uint64_t limit);

/// Orbit identity: the orbit of the span of the first 2^(i-1) coordinate
/// vectors must equal the recursive construction family as a set. The
/// returned orbit doubles as a transitivity certificate (one word per
/// member).
struct TransitivityCertificate {
    OrbitResult orbit;
    VerificationReport report;
};

TransitivityCertificate verify_transitivity(int level);

/// Faithful permutation action of the group on a closed set of signed
/// vectors (rows in canonical ScaledIntMatrix form, sorted). The domain of
/// the seed e1 consists of the minimal vectors of the associated lattice
/// together with their images under H.
struct PermutationRep {
    std::vector<ScaledIntMatrix> domain;              // sorted, canonical
    std::vector<std::vector<std::uint32_t>> images;   // one permutation per generator
    int ambient_dim = 0;
    bool spans_ambient = false;  // faithfulness witness, checked at construction

    std::uint32_t degree() const { return static_cast<std::uint32_t>(domain.size()); }
};

PermutationRep permutation_representation(const GeneratorSet& gens,
                                          const ScaledIntMatrix& seed_vector,
                                          std::uint64_t limit);

/// Closed-form order of the index-2 subgroup generated by the permutations
/// together with the double-size Hadamard blocks; the full group has twice
/// this order.
BigInt half_group_order_formula(int level);

/// Exact group order via a deterministic stabilizer chain on the permutation
/// representation. Verifies that the domain spans R^m (faithfulness) and
/// throws rank_error otherwise.
BigInt group_order(const PermutationRep& rep);

}  // namespace grasspack
