#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "grasspack/bigint.hpp"
#include "grasspack/errors.hpp"

namespace grasspack {

class RationalMatrix;

/// Integer matrix with a global scale: the represented matrix is
/// entries / (sqrt 2)^sqrt2_exponent. Every generator of the groups built
/// here (signed permutations, Hadamard blocks) and every product of them
/// lives in this form, so equality and hashing are exact and cheap.
///
/// Canonical form: the exponent is reduced by 2 (dividing all entries by 2)
/// until the exponent is < 2 or some entry is odd. Immutable after
/// construction apart from assignment.
class ScaledIntMatrix {
public:
    ScaledIntMatrix() : rows_(0), cols_(0), exp_(0) {}
    ScaledIntMatrix(int rows, int cols, unsigned sqrt2_exponent = 0);
    ScaledIntMatrix(int rows, int cols, std::vector<BigInt> entries, unsigned sqrt2_exponent);

    /// Row-major init from small integer literals, exponent last.
    static ScaledIntMatrix from_rows(const std::vector<std::vector<long long>>& rows,
                                     unsigned sqrt2_exponent = 0);
    static ScaledIntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    unsigned sqrt2_exponent() const { return exp_; }

    const BigInt& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    BigInt& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const std::vector<BigInt>& entries() const { return entries_; }

    ScaledIntMatrix transpose() const;
    ScaledIntMatrix operator-() const;

    /// Kronecker product; exponents add.
    ScaledIntMatrix kron(const ScaledIntMatrix& o) const;
    /// Block-diagonal stacking [this 0; 0 o]; exponents must match.
    ScaledIntMatrix block_diag(const ScaledIntMatrix& o) const;
    /// Horizontal concatenation [this | o]; exponents must match.
    ScaledIntMatrix hcat(const ScaledIntMatrix& o) const;

    bool operator==(const ScaledIntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && exp_ == o.exp_ && entries_ == o.entries_;
    }
    bool operator!=(const ScaledIntMatrix& o) const { return !(*this == o); }
    /// Total order on canonical forms (shape, exponent, then entries).
    bool operator<(const ScaledIntMatrix& o) const;

    std::size_t hash() const;

    bool is_zero() const;
    /// True matrix is orthogonal: entries * entries^T == 2^exp * I.
    bool is_orthogonal() const;
    /// Exactly one nonzero entry, equal to +-1, in every row and column.
    bool is_signed_monomial() const;
    /// G * G^T is diagonal (rows pairwise orthogonal as integer vectors).
    bool has_orthogonal_rows() const;

    /// Conversion to a dyadic-entry matrix; requires an even exponent.
    RationalMatrix to_rational() const;

    std::string str() const;

private:
    void canonicalize();

    int rows_, cols_;
    std::vector<BigInt> entries_;  // row-major
    unsigned exp_;
};

ScaledIntMatrix operator*(const ScaledIntMatrix& a, const ScaledIntMatrix& b);

struct ScaledIntMatrixHash {
    std::size_t operator()(const ScaledIntMatrix& m) const { return m.hash(); }
};

}  // namespace grasspack
