#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <unordered_set>

#include "grasspack/clifford.hpp"
#include "grasspack/construction.hpp"
#include "grasspack/errors.hpp"
#include "grasspack/schreier.hpp"

using namespace grasspack;

namespace {

ScaledIntMatrix basis_vector(int m) {
    std::vector<BigInt> e(m);
    e[0] = 1;
    return ScaledIntMatrix(1, m, std::move(e), 0);
}

Subspace coordinate_plane_first(int n, int m) {
    return Subspace(ScaledIntMatrix::identity(n).hcat(ScaledIntMatrix(n, m - n, 0)));
}

// Random word in the generators, for action-invariance probes.
ScaledIntMatrix random_word(const GeneratorSet& gens, std::mt19937& rng, int length) {
    std::uniform_int_distribution<std::size_t> pick(0, gens.elements.size() - 1);
    ScaledIntMatrix g = ScaledIntMatrix::identity(gens.dim());
    for (int k = 0; k < length; ++k) g = g * gens.elements[pick(rng)].matrix();
    return g;
}

}  // namespace

TEST_CASE("generators at level one") {
    auto gens = make_generators(1);
    REQUIRE(gens.elements.size() == 3);
    CHECK(gens.names == std::vector<std::string>{"translate_e1", "gl_identity", "hadamard"});
    CHECK(gens.elements[0].matrix() == ScaledIntMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(gens.elements[1].matrix() == ScaledIntMatrix::identity(2));
    CHECK(gens.elements[2].matrix() == ScaledIntMatrix::from_rows({{1, 1}, {1, -1}}, 1));
    CHECK_THROWS_AS(make_generators(0), grasspack::error);
}

TEST_CASE("hadamard generator structure") {
    for (int level = 1; level <= 4; ++level) {
        auto gens = make_generators(level);
        const ScaledIntMatrix& h = gens.elements.back().matrix();
        const int m = 1 << level;
        CHECK(h.rows() == m);
        CHECK(h.sqrt2_exponent() == 1);
        // Block diagonal of 2x2 blocks pairing consecutive coordinates.
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (i / 2 != j / 2) {
                    CHECK(h.at(i, j).is_zero());
                } else {
                    CHECK(h.at(i, j) == ((i % 2 == 1 && j % 2 == 1) ? -1 : 1));
                }
            }
        // Involution; scaled by sqrt2 it squares to twice the identity.
        CHECK(h * h == ScaledIntMatrix::identity(m));
        ScaledIntMatrix sqrt2_h(h.rows(), h.cols(), h.entries(), 0);  // sqrt2 * H
        ScaledIntMatrix twice = sqrt2_h * sqrt2_h;
        CHECK(twice.sqrt2_exponent() == 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) CHECK(twice.at(i, j) == (i == j ? 2 : 0));
        // An integer matrix times sqrt2*H stays integer.
        CHECK((ScaledIntMatrix::identity(m) * sqrt2_h).sqrt2_exponent() == 0);
    }
}

TEST_CASE("every generator is exactly orthogonal") {
    for (int level = 1; level <= 5; ++level) {
        auto gens = make_generators(level);
        for (const auto& g : gens.elements) CHECK(g.matrix().is_orthogonal());
    }
    CHECK_THROWS_AS(GroupElement(ScaledIntMatrix::from_rows({{1, 1}, {0, 1}})),
                    grasspack::error);
}

TEST_CASE("brute-force closure sizes at small levels") {
    auto c1 = matrix_group_closure(make_generators(1), 100);
    CHECK(c1.size() == 16);
    auto c2 = matrix_group_closure(make_generators(2), 10000);
    CHECK(c2.size() == 2304);
    CHECK_THROWS_AS(matrix_group_closure(make_generators(2), 100), limit_error);
}

TEST_CASE("closure contains the double-size hadamard blocks") {
    // diag(H_4) for level 2, assembled independently of the generator code.
    ScaledIntMatrix h4 = ScaledIntMatrix::from_rows(
        {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}, 2);
    auto closure = matrix_group_closure(make_generators(2), 10000);
    std::unordered_set<ScaledIntMatrix, ScaledIntMatrixHash> seen(closure.begin(), closure.end());
    CHECK(seen.count(h4) == 1);
}

TEST_CASE("closure contains every affine permutation") {
    auto closure = matrix_group_closure(make_generators(2), 10000);
    std::unordered_set<ScaledIntMatrix, ScaledIntMatrixHash> seen(closure.begin(), closure.end());
    auto perms = all_affine_permutations(2);
    CHECK(perms.size() == 24);  // |GL(2,2)| * 4 translations
    for (const auto& p : perms) CHECK(seen.count(p) == 1);
}

TEST_CASE("subspace orbit reproduces the construction at level 2") {
    auto gens = make_generators(2);
    auto orbit = subspace_orbit(coordinate_plane_first(2, 4), gens, 1000);
    auto fam = build_family(2);
    REQUIRE(orbit.members.size() == 18);
    for (const Subspace& s : fam.packing.members()) CHECK(orbit.members.contains(s));

    // Words reach their members: replay each word from the seed.
    for (std::size_t idx = 0; idx < orbit.members.size(); ++idx) {
        Subspace s = orbit.seed;
        for (int gi : orbit.words[idx]) s = act(s, gens.elements[gi].matrix());
        CHECK(s == orbit.members.at(idx));
    }
}

TEST_CASE("line orbit at level 2 gives 24 lines") {
    auto gens = make_generators(2);
    auto orbit = subspace_orbit(Subspace(basis_vector(4)), gens, 1000);
    CHECK(orbit.members.size() == 24);
}

TEST_CASE("orbit limit is enforced") {
    auto gens = make_generators(2);
    CHECK_THROWS_AS(subspace_orbit(Subspace(basis_vector(4)), gens, 10), limit_error);
}

TEST_CASE("orbit is closed under every generator") {
    auto gens = make_generators(2);
    auto orbit = subspace_orbit(coordinate_plane_first(2, 4), gens, 1000);
    for (const Subspace& s : orbit.members.members())
        for (const auto& g : gens.elements) CHECK(orbit.members.contains(act(s, g.matrix())));
}

TEST_CASE("projector conjugation matches the generator action") {
    auto gens = make_generators(2);
    auto fam = build_family(2);
    for (const Subspace& s : fam.packing.members())
        for (const auto& g : gens.elements) {
            Subspace moved = act(s, g.matrix());
            // g^T P g with g = M / sqrt2^k: conjugate by M and divide by 2^k.
            const ScaledIntMatrix& mat = g.matrix();
            RationalMatrix m_rat(mat.rows(), mat.cols());
            for (int i = 0; i < mat.rows(); ++i)
                for (int j = 0; j < mat.cols(); ++j) m_rat.at(i, j) = Dyadic(mat.at(i, j), 0);
            RationalMatrix conj = m_rat.transpose() * s.projector() * m_rat;
            RationalMatrix scaled(conj.rows(), conj.cols());
            for (int i = 0; i < conj.rows(); ++i)
                for (int j = 0; j < conj.cols(); ++j) {
                    const Dyadic& d = conj.at(i, j);
                    scaled.at(i, j) = Dyadic(d.numerator(), d.exponent() + mat.sqrt2_exponent());
                }
            CHECK(moved.projector() == scaled);
        }
}

TEST_CASE("transitivity certificates for levels 2 and 3") {
    for (int level = 2; level <= 3; ++level) {
        auto cert = verify_transitivity(level);
        INFO(cert.report.summary());
        CHECK(cert.report.all_passed());
        CHECK(cert.orbit.members.size() == (1u << (2 * level)) + (1u << level) - 2);
    }
}

TEST_CASE("permutation representation domains") {
    const std::uint64_t expected[] = {8, 48, 480};
    for (int level = 1; level <= 3; ++level) {
        auto gens = make_generators(level);
        auto rep = permutation_representation(gens, basis_vector(gens.dim()), 1 << 20);
        CHECK(rep.degree() == expected[level - 1]);
        CHECK(rep.images.size() == gens.elements.size());
        // Domain is sorted and closed; images are permutations.
        for (std::size_t i = 1; i < rep.domain.size(); ++i)
            CHECK(rep.domain[i - 1] < rep.domain[i]);
        for (const auto& img : rep.images) {
            std::vector<bool> hit(rep.degree(), false);
            for (std::uint32_t t : img) {
                CHECK_FALSE(hit[t]);
                hit[t] = true;
            }
        }
    }
}

TEST_CASE("signed vectors come in antipodal pairs") {
    auto gens = make_generators(2);
    auto rep = permutation_representation(gens, basis_vector(4), 1 << 20);
    std::unordered_set<ScaledIntMatrix, ScaledIntMatrixHash> domain(rep.domain.begin(),
                                                                    rep.domain.end());
    for (const auto& v : rep.domain) CHECK(domain.count(-v) == 1);
}

TEST_CASE("group orders against the brute-force oracle") {
    for (int level = 1; level <= 2; ++level) {
        auto gens = make_generators(level);
        auto closure = matrix_group_closure(gens, 10000);
        auto rep = permutation_representation(gens, basis_vector(gens.dim()), 1 << 20);
        CHECK(group_order(rep) == BigInt(closure.size()));
    }
}

TEST_CASE("group orders match the closed form") {
    CHECK(half_group_order_formula(1) == 8);
    CHECK(half_group_order_formula(2) == 1152);
    CHECK(half_group_order_formula(3) == 2580480);
    for (int level = 1; level <= 3; ++level) {
        auto gens = make_generators(level);
        auto rep = permutation_representation(gens, basis_vector(gens.dim()), 1 << 20);
        BigInt order = group_order(rep);
        CHECK(order == 2 * half_group_order_formula(level));
        if (level == 3) CHECK(order == 5160960);

        // Orbit sizes divide the group order.
        CHECK(order % BigInt(rep.degree()) == 0);
        auto fam_orbit = subspace_orbit(coordinate_plane_first(gens.dim() / 2, gens.dim()),
                                        gens, 1 << 20);
        CHECK(order % BigInt(fam_orbit.members.size()) == 0);
    }
}

TEST_CASE("non-spanning domains are rejected") {
    GeneratorSet trivial{2, {"identity"}, {GroupElement(ScaledIntMatrix::identity(4))}};
    auto rep = permutation_representation(trivial, basis_vector(4), 100);
    CHECK(rep.degree() == 1);  // orbit of e1 under the identity alone
    CHECK_FALSE(rep.spans_ambient);
    CHECK_THROWS_AS(group_order(rep), rank_error);
}

TEST_CASE("stabilizer chain on explicit permutations") {
    // Symmetric group on 4 points from a transposition and a 4-cycle.
    std::vector<Perm> gens = {{1, 0, 2, 3}, {1, 2, 3, 0}};
    StabilizerChain chain(gens);
    CHECK(chain.order() == 24);

    // Klein four-group.
    std::vector<Perm> klein = {{1, 0, 3, 2}, {2, 3, 0, 1}};
    CHECK(StabilizerChain(klein).order() == 4);

    CHECK(StabilizerChain({}).order() == 1);
    CHECK(StabilizerChain({Perm{0, 1, 2}}).order() == 1);
}

TEST_CASE("distance invariance under random group words") {
    std::mt19937 rng(97);
    for (int level = 1; level <= 3; ++level) {
        auto gens = make_generators(level);
        auto fam = build_family(level);
        std::uniform_int_distribution<std::size_t> pick(0, fam.packing.size() - 1);
        for (int probe = 0; probe < 100; ++probe) {
            std::size_t i = pick(rng), j = pick(rng);
            ScaledIntMatrix g = random_word(gens, rng, 8);
            CHECK(squared_distance(act(fam.packing.at(i), g), act(fam.packing.at(j), g)) ==
                  squared_distance(fam.packing.at(i), fam.packing.at(j)));
        }
    }
}
