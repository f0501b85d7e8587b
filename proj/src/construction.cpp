#include "grasspack/construction.hpp"

#include <random>
#include <unordered_set>

#include "grasspack/bounds.hpp"
#include "grasspack/clifford.hpp"
#include "grasspack/errors.hpp"
#include "grasspack/kernel.hpp"
#include "grasspack/principal_angles.hpp"

namespace grasspack {

namespace {

bool entries_are_signs(const ScaledIntMatrix& g) {
    for (const BigInt& e : g.entries())
        if (e < -1 || e > 1) return false;
    return true;
}

bool has_zero_row(const ScaledIntMatrix& g) {
    for (int i = 0; i < g.rows(); ++i) {
        bool all_zero = true;
        for (int j = 0; j < g.cols(); ++j)
            if (!g.at(i, j).is_zero()) {
                all_zero = false;
                break;
            }
        if (all_zero) return true;
    }
    return false;
}

void check_construction_row(const ScaledIntMatrix& g, const char* what) {
    if (!entries_are_signs(g))
        throw error(std::string("construction: ") + what + " has entries outside {-1,0,1}: " +
                    g.str());
    if (has_zero_row(g)) throw error(std::string("construction: ") + what + " has a zero row");
    if (!g.has_orthogonal_rows())
        throw error(std::string("construction: ") + what + " rows are not orthogonal");
}

std::vector<ScaledIntMatrix> family_generators(int level) {
    if (level < 1) throw error("build_family: level must be >= 1");
    if (level == 1)
        return {
            ScaledIntMatrix::from_rows({{1, 0}}),
            ScaledIntMatrix::from_rows({{0, 1}}),
            ScaledIntMatrix::from_rows({{1, 1}}),
            ScaledIntMatrix::from_rows({{1, -1}}),
        };

    const auto prev = family_generators(level - 1);
    const MonomialFamily monos = build_monomials(level);
    const int n = 1 << (level - 1);
    const ScaledIntMatrix id = ScaledIntMatrix::identity(n);
    const ScaledIntMatrix zero(n, n, 0);

    std::vector<ScaledIntMatrix> out;
    out.reserve(2 + 2 * prev.size() + monos.matrices.size());
    out.push_back(id.hcat(zero));
    out.push_back(zero.hcat(id));
    for (const auto& p : prev) out.push_back(p.block_diag(p));
    for (const auto& p : prev) {
        ScaledIntMatrix comp = kernel_basis(p);
        check_construction_row(comp, "orthogonal complement");
        out.push_back(p.block_diag(comp));
    }
    for (const auto& q : monos.matrices) out.push_back(id.hcat(q));

    // Count must match both the closed form and the recursion step.
    const std::uint64_t closed = (1ull << (2 * level)) + (1ull << level) - 2;
    const std::uint64_t inductive =
        2 + 2 * ((1ull << (2 * level - 2)) + (1ull << (level - 1)) - 2) + (1ull << (2 * level - 1));
    if (out.size() != closed || out.size() != inductive)
        throw error("build_family: count mismatch at level " + std::to_string(level));
    return out;
}

}  // namespace

MonomialFamily build_monomials(int level) {
    if (level < 1) throw error("build_monomials: level must be >= 1");
    MonomialFamily fam{level, {}};
    if (level == 1) {
        fam.matrices.push_back(ScaledIntMatrix::from_rows({{1}}));
        fam.matrices.push_back(ScaledIntMatrix::from_rows({{-1}}));
        return fam;
    }
    const MonomialFamily prev = build_monomials(level - 1);
    const std::vector<ScaledIntMatrix> patterns = {
        ScaledIntMatrix::from_rows({{1, 0}, {0, 1}}),
        ScaledIntMatrix::from_rows({{1, 0}, {0, -1}}),
        ScaledIntMatrix::from_rows({{0, 1}, {1, 0}}),
        ScaledIntMatrix::from_rows({{0, 1}, {-1, 0}}),
    };
    fam.matrices.reserve(4 * prev.matrices.size());
    for (const auto& q : prev.matrices)
        for (const auto& p : patterns) fam.matrices.push_back(p.kron(q));

    if (fam.matrices.size() != (1ull << (2 * level - 1)))
        throw error("build_monomials: count mismatch at level " + std::to_string(level));
    std::unordered_set<ScaledIntMatrix, ScaledIntMatrixHash> distinct;
    for (const auto& q : fam.matrices) {
        if (!q.is_signed_monomial())
            throw error("build_monomials: non-monomial member " + q.str());
        if (!distinct.insert(q).second)
            throw error("build_monomials: duplicate member " + q.str());
    }
    return fam;
}

ConstructionFamily build_family(int level) {
    auto gens = family_generators(level);
    std::vector<Subspace> members;
    members.reserve(gens.size());
    for (const auto& g : gens) {
        check_construction_row(g, "generator");
        members.emplace_back(g);
    }
    // Packing construction rejects duplicate projectors.
    return ConstructionFamily{level, Packing(1 << level, 1 << (level - 1), std::move(members))};
}

VerificationReport verify_theorem(int level, SweepMode mode, int threads) {
    if (mode == SweepMode::automatic)
        mode = level <= 5 ? SweepMode::exhaustive : SweepMode::transitive;

    const ConstructionFamily fam = build_family(level);
    const Packing& packing = fam.packing;
    const int m = 1 << level;
    const int n = m / 2;
    const Dyadic half_bound(BigInt(m), 2);  // m/4
    const Dyadic max_d2(BigInt(m), 1);      // m/2

    VerificationReport rep("construction family, level " + std::to_string(level) +
                           (mode == SweepMode::exhaustive ? " (exhaustive)" : " (transitive)"));
    rep.note("m", std::to_string(m));
    rep.note("n", std::to_string(n));
    rep.note("count", std::to_string(packing.size()));

    const std::uint64_t expected = static_cast<std::uint64_t>(m - 1) * (m + 2);
    rep.check("count equals (m-1)(m+2)", packing.size() == expected,
              std::to_string(packing.size()) + " vs " + std::to_string(expected));

    const Fraction bound = rankin_bound(m, n);
    rep.check("bound equals m/4", bound == Fraction(half_bound), bound.str());
    auto applic = bound_applicability(m, n, BigInt(packing.size()));
    rep.check("bound applicable (N > m(m+1)/2)", applic.applicable);
    rep.check("equality condition (N <= (m-1)(m+2))", applic.equality_possible);

    if (mode == SweepMode::exhaustive) {
        const PairStats& st = packing.stats(threads);
        bool two_valued = true;
        std::string offender;
        for (const auto& [d2, cnt] : st.histogram) {
            if (d2 != half_bound && d2 != max_d2) {
                two_valued = false;
                offender = "d^2 = " + d2.str() + " (" + std::to_string(cnt) + " pairs)";
                break;
            }
        }
        rep.check("all squared distances in {m/4, m/2}", two_valued, offender);
        rep.check("min squared distance equals m/4", st.min_d2 == half_bound, st.min_d2.str());
        {
            std::string h;
            for (const auto& [d2, cnt] : st.histogram)
                h += (h.empty() ? "" : ", ") + d2.str() + ": " + std::to_string(cnt);
            rep.note("histogram", "{" + h + "}");
        }
    } else {
        // Distances from one representative only; the reduction is licensed
        // by a machine-checked transitivity certificate.
        TransitivityCertificate cert = verify_transitivity(level);
        rep.check("transitivity certificate", cert.report.all_passed());
        const Subspace& rep0 = packing.at(0);
        bool ok = true;
        Dyadic min_d2;
        bool first = true;
        std::string offender;
        for (std::size_t j = 1; j < packing.size(); ++j) {
            Dyadic d2 = squared_distance(rep0, packing.at(j));
            if (d2 != half_bound && d2 != max_d2) {
                ok = false;
                offender = "pair (0," + std::to_string(j) + "): d^2 = " + d2.str() +
                           "; generators " + rep0.generator().str() + " / " +
                           packing.at(j).generator().str();
                break;
            }
            if (first || d2 < min_d2) {
                min_d2 = d2;
                first = false;
            }
        }
        rep.check("representative distances in {m/4, m/2}", ok, offender);
        rep.check("representative min equals m/4", !first && min_d2 == half_bound);
    }

    // Principal-angle spectra: the three admissible multisets.
    {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        const std::size_t count = packing.size();
        if (level <= 3) {
            for (std::size_t i = 0; i < count; ++i)
                for (std::size_t j = i + 1; j < count; ++j) pairs.emplace_back(i, j);
        } else {
            std::mt19937 rng(1234 + static_cast<unsigned>(level));
            std::uniform_int_distribution<std::size_t> pick(0, count - 1);
            while (pairs.size() < 300) {
                std::size_t i = pick(rng), j = pick(rng);
                if (i != j) pairs.emplace_back(std::min(i, j), std::max(i, j));
            }
        }
        std::vector<Dyadic> all_zero(n, Dyadic(0));
        std::vector<Dyadic> all_half(n, Dyadic(BigInt(1), 1));
        std::vector<Dyadic> half_ones(n, Dyadic(0));
        for (int k = n / 2; k < n; ++k) half_ones[k] = Dyadic(1);

        bool ok = true;
        std::string offender;
        for (auto [i, j] : pairs) {
            const Subspace& a = packing.at(i);
            const Subspace& b = packing.at(j);
            bool matched =
                confirm_cos_sq_spectrum(a, b, all_zero) == SpectrumCheck::confirmed ||
                confirm_cos_sq_spectrum(a, b, all_half) == SpectrumCheck::confirmed ||
                (n % 2 == 0 &&
                 confirm_cos_sq_spectrum(a, b, half_ones) == SpectrumCheck::confirmed);
            if (!matched) {
                ok = false;
                offender = "pair (" + std::to_string(i) + "," + std::to_string(j) +
                           "); generators " + a.generator().str() + " / " + b.generator().str();
                break;
            }
        }
        rep.check("principal-angle spectra match the three cases", ok, offender);
        rep.note("angle_pairs_checked", std::to_string(pairs.size()));
    }
    return rep;
}

}  // namespace grasspack
