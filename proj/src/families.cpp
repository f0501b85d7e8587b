#include "grasspack/families.hpp"

#include "grasspack/bounds.hpp"
#include "grasspack/errors.hpp"

namespace grasspack {

namespace {

int seed_dim(OrbitFamily f, int level) {
    switch (f) {
        case OrbitFamily::lines:
            return 1;
        case OrbitFamily::planes_2:
            return 2;
        case OrbitFamily::quarter:
            return 1 << (level - 2);  // m/4
    }
    throw error("unknown family");
}

void check_level(OrbitFamily f, int level) {
    const int min_level = f == OrbitFamily::quarter ? 2 : 1;
    if (level < min_level)
        throw error("family " + family_name(f) + ": level must be >= " +
                    std::to_string(min_level));
}

}  // namespace

std::string family_name(OrbitFamily f) {
    switch (f) {
        case OrbitFamily::lines:
            return "lines";
        case OrbitFamily::planes_2:
            return "planes2";
        case OrbitFamily::quarter:
            return "quarter";
    }
    throw error("unknown family");
}

FamilyClaim predict(OrbitFamily f, int level) {
    check_level(f, level);
    const BigInt m = pow2(level);
    FamilyClaim claim{f, level, 0, Fraction(0), false};
    switch (f) {
        case OrbitFamily::lines: {
            // (2+2)(2^2+2)...(2^i+2) lines at minimal angle pi/4.
            BigInt count = 1;
            for (int r = 1; r <= level; ++r) count *= pow2(r) + 2;
            claim.predicted_count = count;
            claim.predicted_min_d2 = Fraction(BigInt(1), BigInt(2));
            claim.conjectured = false;
            break;
        }
        case OrbitFamily::planes_2: {
            // (1/12) (2^i - 1) prod_{r=0}^{i} (2^r + 2), minimal distance 1.
            BigInt count = pow2(level) - 1;
            for (int r = 0; r <= level; ++r) count *= pow2(r) + 2;
            claim.predicted_count = count / 12;
            claim.predicted_min_d2 = Fraction(1);
            claim.conjectured = true;
            break;
        }
        case OrbitFamily::quarter: {
            // (1/12) (m-2)(m-1)(m+2)(m+4), minimal distance sqrt(m/8).
            claim.predicted_count = (m - 2) * (m - 1) * (m + 2) * (m + 4) / 12;
            claim.predicted_min_d2 = Fraction(m, BigInt(8));
            claim.conjectured = true;
            break;
        }
    }
    return claim;
}

Packing realize(OrbitFamily f, int level, std::uint64_t limit) {
    check_level(f, level);
    const GeneratorSet gens = make_generators(level);
    const int n = seed_dim(f, level);
    const int m = 1 << level;
    ScaledIntMatrix seed =
        ScaledIntMatrix::identity(n).hcat(ScaledIntMatrix(n, m - n, 0));
    if (limit == 0) {
        FamilyClaim claim = predict(f, level);
        limit = 4 * claim.predicted_count.convert_to<std::uint64_t>() + 16;
    }
    OrbitResult orbit = subspace_orbit(Subspace(seed), gens, limit);
    return std::move(orbit.members);
}

VerificationReport check_family(OrbitFamily f, int level, int threads, std::uint64_t limit) {
    const FamilyClaim claim = predict(f, level);
    const Packing packing = realize(f, level, limit);
    const int m = 1 << level;

    VerificationReport rep("family " + family_name(f) + ", level " + std::to_string(level) +
                           (claim.conjectured
                                ? " (conjectured; computationally confirmed at this level only)"
                                : ""));
    rep.note("m", std::to_string(m));
    rep.note("n", std::to_string(packing.dim()));
    rep.note("count", std::to_string(packing.size()));
    rep.note("predicted_count", claim.predicted_count.str());

    rep.check("orbit count matches the closed form",
              BigInt(packing.size()) == claim.predicted_count,
              std::to_string(packing.size()) + " vs " + claim.predicted_count.str());

    const PairStats& st = packing.stats(threads);
    rep.note("min_d2", st.min_d2.str());
    rep.note("predicted_min_d2", claim.predicted_min_d2.str());
    rep.check("minimal squared distance matches",
              Fraction(st.min_d2) == claim.predicted_min_d2,
              st.min_d2.str() + " vs " + claim.predicted_min_d2.str());
    {
        std::string h;
        for (const auto& [d2, cnt] : st.histogram)
            h += (h.empty() ? "" : ", ") + d2.str() + ": " + std::to_string(cnt);
        rep.note("histogram", "{" + h + "}");
    }

    // The minimum can never beat the Rankin bound; record whether it is met.
    const Fraction bound = rankin_bound(m, packing.dim());
    rep.check("min distance within Rankin bound", Fraction(st.min_d2) <= bound,
              Fraction(st.min_d2).str() + " vs " + bound.str());
    rep.note("rankin_bound", bound.str());
    rep.note("meets_rankin_bound", Fraction(st.min_d2) == bound ? "true" : "false");

    if (f == OrbitFamily::lines) {
        // For lines d^2 = 1 - cos^2, so the largest squared cosine over all
        // pairs is 1 - min d^2; it must be exactly 1/2 (minimal angle pi/4).
        Dyadic max_cos_sq = Dyadic(1) - st.min_d2;
        rep.check("maximal squared cosine equals 1/2", max_cos_sq == Dyadic(BigInt(1), 1),
                  max_cos_sq.str());
    }
    return rep;
}

}  // namespace grasspack
