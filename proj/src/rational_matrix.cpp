#include "grasspack/rational_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace grasspack {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Dyadic(1);
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix add: shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix sub: shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw dimension_error("matrix mul: shape mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Dyadic& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Dyadic& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Dyadic RationalMatrix::trace() const {
    if (rows_ != cols_) throw dimension_error("trace: matrix not square");
    Dyadic t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool RationalMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

std::size_t RationalMatrix::hash() const {
    std::size_t h = hash_combine(rows_, cols_);
    for (const Dyadic& e : entries_) h = hash_combine(h, e.hash());
    return h;
}

std::string RationalMatrix::str() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " [";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

RationalMatrix::ScaledView RationalMatrix::to_common_scale() const {
    ScaledView v;
    for (const Dyadic& e : entries_) v.exp2 = std::max(v.exp2, e.exponent());
    v.entries.reserve(entries_.size());
    for (const Dyadic& e : entries_)
        v.entries.push_back(e.numerator() << (v.exp2 - e.exponent()));
    return v;
}

Dyadic trace_product(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw dimension_error("trace_product: operands must be square of equal size");
    Dyadic t;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Dyadic& x = a.at(i, j);
            if (x.is_zero()) continue;
            const Dyadic& y = b.at(j, i);
            if (y.is_zero()) continue;
            t += x * y;
        }
    return t;
}

}  // namespace grasspack
