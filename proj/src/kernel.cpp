#include "grasspack/kernel.hpp"

#include <utility>

#include "grasspack/errors.hpp"

namespace grasspack {

namespace {

struct Echelon {
    int rows, cols;
    std::vector<BigInt> a;  // row-major, rows above `rank` are the echelon rows
    std::vector<int> pivot_cols;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
    BigInt& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const BigInt& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Bareiss forward elimination. Pivot rule: first nonzero column, smallest
// row index. All divisions are exact.
Echelon eliminate(int rows, int cols, std::vector<BigInt> entries) {
    Echelon e{rows, cols, std::move(entries), {}};
    int r = 0;
    BigInt prev = 1;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot_row = -1;
        for (int i = r; i < rows; ++i) {
            if (!e.at(i, col).is_zero()) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) continue;
        if (pivot_row != r)
            for (int j = 0; j < cols; ++j) std::swap(e.at(r, j), e.at(pivot_row, j));
        const BigInt piv = e.at(r, col);
        for (int i = r + 1; i < rows; ++i) {
            const BigInt lead = e.at(i, col);
            for (int j = col + 1; j < cols; ++j) {
                BigInt v = piv * e.at(i, j) - lead * e.at(r, j);
                v /= prev;  // exact (Bareiss)
                e.at(i, j) = std::move(v);
            }
            e.at(i, col) = 0;
        }
        prev = piv;
        e.pivot_cols.push_back(col);
        ++r;
    }
    return e;
}

void primitivize(std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const BigInt& x : v) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
    if (g > 1)
        for (BigInt& x : v) x /= g;
    for (const BigInt& x : v) {
        if (x.is_zero()) continue;
        if (x < 0)
            for (BigInt& y : v) y = -y;
        break;
    }
}

}  // namespace

int integer_rank(int rows, int cols, std::vector<BigInt> entries) {
    return eliminate(rows, cols, std::move(entries)).rank();
}

std::vector<std::vector<BigInt>> integer_kernel(int rows, int cols,
                                                const std::vector<BigInt>& entries) {
    Echelon e = eliminate(rows, cols, entries);
    const int rank = e.rank();
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<BigInt>> kernel;
    kernel.reserve(cols - rank);
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<BigInt> v(cols);
        v[f] = 1;
        // Integer back substitution: when the pivot does not divide the
        // partial sum, rescale the whole vector instead of leaving the ring.
        for (int k = rank - 1; k >= 0; --k) {
            const int pc = e.pivot_cols[k];
            BigInt s = 0;
            for (int j = pc + 1; j < cols; ++j) {
                if (!v[j].is_zero() && !e.at(k, j).is_zero()) s += e.at(k, j) * v[j];
            }
            if (s.is_zero()) continue;
            const BigInt& piv = e.at(k, pc);
            BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(s),
                                                  boost::multiprecision::abs(piv));
            BigInt mult = boost::multiprecision::abs(piv) / g;
            if (mult != 1) {
                for (BigInt& x : v) x *= mult;
                s *= mult;
            }
            v[pc] = -s / piv;
        }
        primitivize(v);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

RationalMatrix kernel_basis(const RationalMatrix& g) {
    // Row scaling does not change the kernel; clear denominators per row.
    std::vector<BigInt> a(static_cast<size_t>(g.rows()) * g.cols());
    for (int i = 0; i < g.rows(); ++i) {
        unsigned e = 0;
        for (int j = 0; j < g.cols(); ++j) e = std::max(e, g.at(i, j).exponent());
        for (int j = 0; j < g.cols(); ++j)
            a[static_cast<size_t>(i) * g.cols() + j] = g.at(i, j).numerator()
                                                       << (e - g.at(i, j).exponent());
    }
    if (integer_rank(g.rows(), g.cols(), a) != g.rows())
        throw rank_error("kernel_basis: input is rank deficient");
    auto rows = integer_kernel(g.rows(), g.cols(), a);
    RationalMatrix k(static_cast<int>(rows.size()), g.cols());
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < g.cols(); ++j) k.at(static_cast<int>(i), j) = Dyadic(rows[i][j], 0);
    return k;
}

ScaledIntMatrix kernel_basis(const ScaledIntMatrix& g) {
    // The global sqrt2 scale is a row scaling; it drops out of the kernel.
    if (integer_rank(g.rows(), g.cols(), g.entries()) != g.rows())
        throw rank_error("kernel_basis: input is rank deficient");
    auto rows = integer_kernel(g.rows(), g.cols(), g.entries());
    std::vector<BigInt> flat;
    flat.reserve(rows.size() * g.cols());
    for (auto& r : rows)
        for (BigInt& x : r) flat.push_back(std::move(x));
    return ScaledIntMatrix(static_cast<int>(rows.size()), g.cols(), std::move(flat), 0);
}

}  // namespace grasspack
