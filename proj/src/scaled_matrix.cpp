#include "grasspack/scaled_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "grasspack/rational_matrix.hpp"

namespace grasspack {

ScaledIntMatrix::ScaledIntMatrix(int rows, int cols, unsigned sqrt2_exponent)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols), exp_(sqrt2_exponent) {
    if (rows < 0 || cols < 0) throw dimension_error("matrix: negative dimension");
    canonicalize();
}

ScaledIntMatrix::ScaledIntMatrix(int rows, int cols, std::vector<BigInt> entries,
                                 unsigned sqrt2_exponent)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), exp_(sqrt2_exponent) {
    if (rows < 0 || cols < 0) throw dimension_error("matrix: negative dimension");
    if (entries_.size() != static_cast<size_t>(rows) * cols)
        throw dimension_error("matrix: entry count does not match shape");
    canonicalize();
}

ScaledIntMatrix ScaledIntMatrix::from_rows(const std::vector<std::vector<long long>>& rows,
                                           unsigned sqrt2_exponent) {
    int r = static_cast<int>(rows.size());
    int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
    std::vector<BigInt> e;
    e.reserve(static_cast<size_t>(r) * c);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw dimension_error("matrix: ragged rows");
        for (long long v : row) e.emplace_back(v);
    }
    return ScaledIntMatrix(r, c, std::move(e), sqrt2_exponent);
}

ScaledIntMatrix ScaledIntMatrix::identity(int n) {
    ScaledIntMatrix m(n, n, 0);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void ScaledIntMatrix::canonicalize() {
    if (is_zero()) {  // scale of the zero matrix is meaningless
        exp_ = 0;
        return;
    }
    while (exp_ >= 2) {
        bool all_even = true;
        for (const BigInt& e : entries_) {
            if (!e.is_zero() && !grasspack::is_even(e)) {
                all_even = false;
                break;
            }
        }
        if (!all_even) break;
        for (BigInt& e : entries_)
            if (!e.is_zero()) e >>= 1;
        exp_ -= 2;
    }
}

ScaledIntMatrix ScaledIntMatrix::transpose() const {
    std::vector<BigInt> e(entries_.size());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) e[static_cast<size_t>(j) * rows_ + i] = at(i, j);
    return ScaledIntMatrix(cols_, rows_, std::move(e), exp_);
}

ScaledIntMatrix ScaledIntMatrix::operator-() const {
    std::vector<BigInt> e(entries_.size());
    for (size_t i = 0; i < entries_.size(); ++i) e[i] = -entries_[i];
    return ScaledIntMatrix(rows_, cols_, std::move(e), exp_);
}

ScaledIntMatrix operator*(const ScaledIntMatrix& a, const ScaledIntMatrix& b) {
    if (a.cols() != b.rows())
        throw dimension_error("mat_mul: " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                              "x" + std::to_string(b.cols()));
    std::vector<BigInt> e(static_cast<size_t>(a.rows()) * b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const BigInt& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                e[static_cast<size_t>(i) * b.cols() + j] += aik * bkj;
            }
        }
    }
    return ScaledIntMatrix(a.rows(), b.cols(), std::move(e), a.sqrt2_exponent() + b.sqrt2_exponent());
}

ScaledIntMatrix ScaledIntMatrix::kron(const ScaledIntMatrix& o) const {
    const int rr = rows_ * o.rows_, rc = cols_ * o.cols_;
    std::vector<BigInt> e(static_cast<size_t>(rr) * rc);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const BigInt& a = at(i, j);
            if (a.is_zero()) continue;
            for (int k = 0; k < o.rows_; ++k)
                for (int l = 0; l < o.cols_; ++l)
                    e[static_cast<size_t>(i * o.rows_ + k) * rc + (j * o.cols_ + l)] =
                        a * o.at(k, l);
        }
    return ScaledIntMatrix(rr, rc, std::move(e), exp_ + o.exp_);
}

ScaledIntMatrix ScaledIntMatrix::block_diag(const ScaledIntMatrix& o) const {
    if (exp_ != o.exp_) throw dimension_error("block_diag: mismatched scale exponents");
    const int rr = rows_ + o.rows_, rc = cols_ + o.cols_;
    std::vector<BigInt> e(static_cast<size_t>(rr) * rc);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) e[static_cast<size_t>(i) * rc + j] = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < o.cols_; ++j)
            e[static_cast<size_t>(rows_ + i) * rc + (cols_ + j)] = o.at(i, j);
    return ScaledIntMatrix(rr, rc, std::move(e), exp_);
}

ScaledIntMatrix ScaledIntMatrix::hcat(const ScaledIntMatrix& o) const {
    if (rows_ != o.rows_) throw dimension_error("hcat: row count mismatch");
    if (exp_ != o.exp_) throw dimension_error("hcat: mismatched scale exponents");
    const int rc = cols_ + o.cols_;
    std::vector<BigInt> e(static_cast<size_t>(rows_) * rc);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) e[static_cast<size_t>(i) * rc + j] = at(i, j);
        for (int j = 0; j < o.cols_; ++j) e[static_cast<size_t>(i) * rc + cols_ + j] = o.at(i, j);
    }
    return ScaledIntMatrix(rows_, rc, std::move(e), exp_);
}

bool ScaledIntMatrix::operator<(const ScaledIntMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    if (exp_ != o.exp_) return exp_ < o.exp_;
    for (size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != o.entries_[i]) return entries_[i] < o.entries_[i];
    return false;
}

std::size_t ScaledIntMatrix::hash() const {
    std::size_t h = hash_combine(hash_combine(rows_, cols_), exp_);
    for (const BigInt& e : entries_) h = hash_combine(h, hash_bigint(e));
    return h;
}

bool ScaledIntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const BigInt& e) { return e.is_zero(); });
}

bool ScaledIntMatrix::is_orthogonal() const {
    if (rows_ != cols_) return false;
    BigInt scale = pow2(exp_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = i; j < rows_; ++j) {
            BigInt dot = 0;
            for (int k = 0; k < cols_; ++k) dot += at(i, k) * at(j, k);
            if (dot != (i == j ? scale : BigInt(0))) return false;
        }
    }
    return true;
}

bool ScaledIntMatrix::is_signed_monomial() const {
    if (rows_ != cols_) return false;
    std::vector<bool> col_used(cols_, false);
    for (int i = 0; i < rows_; ++i) {
        int nonzero = -1;
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            if (nonzero >= 0) return false;
            if (at(i, j) != 1 && at(i, j) != -1) return false;
            nonzero = j;
        }
        if (nonzero < 0 || col_used[nonzero]) return false;
        col_used[nonzero] = true;
    }
    return true;
}

bool ScaledIntMatrix::has_orthogonal_rows() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < rows_; ++j) {
            BigInt dot = 0;
            for (int k = 0; k < cols_; ++k) dot += at(i, k) * at(j, k);
            if (!dot.is_zero()) return false;
        }
    return true;
}

RationalMatrix ScaledIntMatrix::to_rational() const {
    if (exp_ % 2 != 0)
        throw ring_error("to_rational: odd sqrt2 exponent " + std::to_string(exp_));
    RationalMatrix r(rows_, cols_);
    unsigned half = exp_ / 2;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = Dyadic(at(i, j), half);
    return r;
}

std::string ScaledIntMatrix::str() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " /sqrt2^" << exp_ << " [";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

}  // namespace grasspack
