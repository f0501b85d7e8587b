#pragma once

#include <vector>

#include "grasspack/bigint.hpp"
#include "grasspack/rational_matrix.hpp"
#include "grasspack/scaled_matrix.hpp"

namespace grasspack {

/// Rank of an integer matrix (row-major), via fraction-free elimination.
int integer_rank(int rows, int cols, std::vector<BigInt> entries);

/// Kernel of an integer matrix: rows are a basis of { v : A v^T = 0 },
/// each row primitive (content 1, first nonzero entry positive). Rows are
/// ordered by the free column they correspond to, so the output is
/// deterministic. Returns a (cols - rank) x cols row-major matrix.
std::vector<std::vector<BigInt>> integer_kernel(int rows, int cols,
                                                const std::vector<BigInt>& entries);

/// Kernel basis of a full-row-rank matrix. Pivoting is fixed (first nonzero
/// column, smallest row index), so results are reproducible. Throws
/// rank_error if the input is rank deficient.
RationalMatrix kernel_basis(const RationalMatrix& g);
ScaledIntMatrix kernel_basis(const ScaledIntMatrix& g);

}  // namespace grasspack
