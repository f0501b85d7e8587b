#include "grasspack/principal_angles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "grasspack/errors.hpp"

namespace grasspack {

namespace {

std::vector<std::vector<double>> orthonormal_rows(const ScaledIntMatrix& g) {
    const int n = g.rows(), m = g.cols();
    std::vector<std::vector<double>> rows(n, std::vector<double>(m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) rows[i][j] = g.at(i, j).convert_to<double>();
    // Modified Gram-Schmidt with one re-orthogonalization pass.
    for (int i = 0; i < n; ++i) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < i; ++k) {
                double dot = 0;
                for (int j = 0; j < m; ++j) dot += rows[i][j] * rows[k][j];
                for (int j = 0; j < m; ++j) rows[i][j] -= dot * rows[k][j];
            }
        }
        double norm = 0;
        for (int j = 0; j < m; ++j) norm += rows[i][j] * rows[i][j];
        norm = std::sqrt(norm);
        for (int j = 0; j < m; ++j) rows[i][j] /= norm;
    }
    return rows;
}

// Eigenvalues of a small symmetric matrix by cyclic Jacobi sweeps.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    const int n = static_cast<int>(a.size());
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-26) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[i][i];
    return eig;
}

}  // namespace

std::vector<double> cos_sq_floating(const Subspace& p, const Subspace& q) {
    if (p.ambient_dim() != q.ambient_dim() || p.dim() != q.dim())
        throw dimension_error("principal angles: subspaces from different Grassmannians");
    const int n = p.dim(), m = p.ambient_dim();
    auto op = orthonormal_rows(p.generator());
    auto oq = orthonormal_rows(q.generator());
    // cos^2 values are the eigenvalues of S S^T with S = O_p O_q^T.
    std::vector<std::vector<double>> s(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double dot = 0;
            for (int k = 0; k < m; ++k) dot += op[i][k] * oq[j][k];
            s[i][j] = dot;
        }
    std::vector<std::vector<double>> sst(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double dot = 0;
            for (int k = 0; k < n; ++k) dot += s[i][k] * s[j][k];
            sst[i][j] = dot;
        }
    auto eig = symmetric_eigenvalues(std::move(sst));
    for (double& e : eig) e = std::clamp(e, 0.0, 1.0);
    std::sort(eig.begin(), eig.end());
    return eig;
}

SpectrumCheck confirm_cos_sq_spectrum(const Subspace& p, const Subspace& q,
                                      const std::vector<Dyadic>& candidate) {
    if (p.ambient_dim() != q.ambient_dim() || p.dim() != q.dim())
        throw dimension_error("principal angles: subspaces from different Grassmannians");
    const int n = p.dim();
    if (static_cast<int>(candidate.size()) != n)
        throw error("spectrum check: candidate size != subspace dimension");
    for (const Dyadic& c : candidate)
        if (c < Dyadic(0) || c > Dyadic(1)) throw error("spectrum check: cos^2 outside [0,1]");

    // tr((P Q)^k) equals the k-th power sum of the squared cosines.
    RationalMatrix t = p.projector() * q.projector();
    RationalMatrix tk = t;
    std::vector<Dyadic> powers(candidate.begin(), candidate.end());
    for (int k = 1; k <= n; ++k) {
        Dyadic expected;
        for (int i = 0; i < n; ++i) expected += powers[i];
        if (tk.trace() != expected) return SpectrumCheck::rejected;
        if (k < n) {
            tk = tk * t;
            for (int i = 0; i < n; ++i) powers[i] *= candidate[i];
        }
    }
    return SpectrumCheck::confirmed;
}

PrincipalAngles principal_angles(const Subspace& p, const Subspace& q) {
    auto approx = cos_sq_floating(p, q);

    // Snap each floating cos^2 to the nearest small-denominator dyadic.
    std::vector<Dyadic> candidate;
    candidate.reserve(approx.size());
    for (double c : approx) {
        bool snapped = false;
        for (unsigned t = 0; t <= 20 && !snapped; ++t) {
            double scaled = std::ldexp(c, static_cast<int>(t));
            double k = std::round(scaled);
            // |c - k/2^t| < 3e-10, expressed at scale 2^t.
            if (std::abs(scaled - k) < 3e-10 * std::ldexp(1.0, static_cast<int>(t))) {
                candidate.emplace_back(BigInt(static_cast<long long>(k)), t);
                snapped = true;
            }
        }
        if (!snapped) throw error("principal angles: no dyadic hypothesis near " + std::to_string(c));
    }
    std::sort(candidate.begin(), candidate.end());

    if (confirm_cos_sq_spectrum(p, q, candidate) != SpectrumCheck::confirmed)
        throw error("principal angles: floating hypothesis rejected by exact check");

    // Confirmed spectrum must reproduce the exact squared distance.
    Dyadic sum_sin_sq;
    for (const Dyadic& c : candidate) sum_sin_sq += Dyadic(1) - c;
    if (sum_sin_sq != squared_distance(p, q))
        throw error("principal angles: spectrum inconsistent with distance");

    PrincipalAngles result;
    result.cos_squared = std::move(candidate);
    result.angles.reserve(result.cos_squared.size());
    for (const Dyadic& c : result.cos_squared)
        result.angles.push_back(std::acos(std::sqrt(c.to_double())));
    return result;
}

}  // namespace grasspack
