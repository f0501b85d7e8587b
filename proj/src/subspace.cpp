#include "grasspack/subspace.hpp"

#include <cassert>

#include "grasspack/errors.hpp"
#include "grasspack/kernel.hpp"

namespace grasspack {

namespace {

// Projector for pairwise-orthogonal integer rows: sum_r (r r^T) / (r.r).
// The sqrt2 scale of the generator drops out (r r^T and r.r scale together).
RationalMatrix projector_orthogonal_rows(const ScaledIntMatrix& g) {
    const int m = g.cols();
    RationalMatrix p(m, m);
    for (int r = 0; r < g.rows(); ++r) {
        BigInt norm = 0;
        for (int j = 0; j < m; ++j) norm += g.at(r, j) * g.at(r, j);
        for (int a = 0; a < m; ++a) {
            if (g.at(r, a).is_zero()) continue;
            for (int b = 0; b < m; ++b) {
                if (g.at(r, b).is_zero()) continue;
                p.at(a, b) += Dyadic::from_fraction(g.at(r, a) * g.at(r, b), norm);
            }
        }
    }
    return p;
}

// General path: fraction-free Gauss-Jordan on [G G^T | G] yields d * (G G^T)^-1 G;
// then P = G^T * X / d entry-wise, which must land back in the dyadic ring.
RationalMatrix projector_general(const ScaledIntMatrix& g) {
    const int n = g.rows(), m = g.cols();
    std::vector<BigInt> gram(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            BigInt s = 0;
            for (int k = 0; k < m; ++k) s += g.at(i, k) * g.at(j, k);
            gram[static_cast<size_t>(i) * n + j] = std::move(s);
        }

    // Augmented [gram | g], fraction-free Gauss-Jordan (Bareiss).
    const int cols = n + m;
    std::vector<BigInt> a(static_cast<size_t>(n) * cols);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * cols + j] = gram[static_cast<size_t>(i) * n + j];
        for (int j = 0; j < m; ++j) a[static_cast<size_t>(i) * cols + n + j] = g.at(i, j);
    }
    auto at = [&](int i, int j) -> BigInt& { return a[static_cast<size_t>(i) * cols + j]; };
    BigInt prev = 1;
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int i = col; i < n; ++i)
            if (!at(i, col).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) throw rank_error("projector: generator is rank deficient");
        if (pr != col)
            for (int j = 0; j < cols; ++j) std::swap(at(col, j), at(pr, j));
        const BigInt piv = at(col, col);
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            const BigInt lead = at(i, col);
            for (int j = col + 1; j < cols; ++j) {
                BigInt v = piv * at(i, j) - lead * at(col, j);
                v /= prev;
                at(i, j) = std::move(v);
            }
            at(i, col) = 0;
        }
        prev = piv;
    }
    const BigInt det = prev;  // common denominator of the solve, up to sign

    // X = det * (G G^T)^-1 G sits in the augmented block; P = G^T X / det.
    RationalMatrix p(m, m);
    for (int aa = 0; aa < m; ++aa)
        for (int b = 0; b < m; ++b) {
            BigInt s = 0;
            for (int r = 0; r < n; ++r) s += g.at(r, aa) * at(r, n + b);
            p.at(aa, b) = Dyadic::from_fraction(std::move(s), det);
        }
    return p;
}

}  // namespace

Subspace::Subspace(const ScaledIntMatrix& generator) : generator_(generator) {
    const int n = generator_.rows(), m = generator_.cols();
    if (n == 0 || m == 0 || n > m) throw dimension_error("subspace: bad generator shape");
    if (integer_rank(n, m, generator_.entries()) != n)
        throw rank_error("subspace: generator is rank deficient");
    projector_ = generator_.has_orthogonal_rows() ? projector_orthogonal_rows(generator_)
                                                  : projector_general(generator_);
    // Structural sanity on every construction; idempotence is O(m^3) and
    // checked when assertions are on.
    if (!projector_.is_symmetric()) throw error("subspace: projector not symmetric");
    if (projector_.trace() != Dyadic(n)) throw error("subspace: projector trace != dim");
    assert(projector_ * projector_ == projector_);
    scaled_ = projector_.to_common_scale();
    hash_ = hash_combine(scaled_.exp2, 0);
    for (const BigInt& e : scaled_.entries) hash_ = hash_combine(hash_, hash_bigint(e));
}

Subspace orthogonal_complement(const Subspace& p) {
    Subspace c(kernel_basis(p.generator()));
    // Independent route: the projectors must sum to the identity exactly.
    assert(c.projector() + p.projector() == RationalMatrix::identity(p.ambient_dim()));
    return c;
}

Dyadic squared_distance(const Subspace& p, const Subspace& q) {
    if (p.ambient_dim() != q.ambient_dim() || p.dim() != q.dim())
        throw dimension_error("squared_distance: subspaces from different Grassmannians");
    Dyadic d2 = Dyadic(p.dim()) - trace_product(p.projector(), q.projector());
#ifndef NDEBUG
    {
        // Second route: (1/2) * sum of squared projector differences.
        Dyadic frob;
        const RationalMatrix& a = p.projector();
        const RationalMatrix& b = q.projector();
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) {
                Dyadic d = a.at(i, j) - b.at(i, j);
                frob += d * d;
            }
        assert(d2 == Dyadic(frob.numerator(), frob.exponent() + 1));
    }
#endif
    return d2;
}

Subspace act(const Subspace& s, const ScaledIntMatrix& g) {
    return Subspace(s.generator() * g);
}

}  // namespace grasspack
