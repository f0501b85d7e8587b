#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "grasspack/dyadic.hpp"
#include "grasspack/errors.hpp"

namespace grasspack {

/// Dense matrix of exact dyadic rationals. No rounding anywhere.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw dimension_error("matrix: negative dimension");
    }

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Dyadic& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    Dyadic& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    RationalMatrix transpose() const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix operator*(const RationalMatrix& o) const;

    Dyadic trace() const;
    bool is_symmetric() const;

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    std::size_t hash() const;
    std::string str() const;

    /// Minimal common power-of-two denominator view: integer matrix M and
    /// exponent e with *this == M / 2^e.
    struct ScaledView {
        std::vector<BigInt> entries;  // row-major
        unsigned exp2 = 0;
    };
    ScaledView to_common_scale() const;

private:
    int rows_, cols_;
    std::vector<Dyadic> entries_;
};

/// Exact tr(a * b) without forming the product.
Dyadic trace_product(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace grasspack
