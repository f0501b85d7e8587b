#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "grasspack/bounds.hpp"
#include "grasspack/packing.hpp"
#include "grasspack/principal_angles.hpp"
#include "grasspack/subspace.hpp"

#include "eq4_fixture.hpp"

using namespace grasspack;

namespace {

Subspace coordinate_plane_first(int n, int m) {
    return Subspace(ScaledIntMatrix::identity(n).hcat(ScaledIntMatrix(n, m - n, 0)));
}

Dyadic half() { return Dyadic(BigInt(1), 1); }

}  // namespace

TEST_CASE("projector of the 45-degree line") {
    Subspace s(ScaledIntMatrix::from_rows({{1, 1}}));
    CHECK(s.projector().at(0, 0) == half());
    CHECK(s.projector().at(0, 1) == half());
    CHECK(s.projector().at(1, 0) == half());
    CHECK(s.projector().at(1, 1) == half());
}

TEST_CASE("projector of a coordinate plane") {
    Subspace s = coordinate_plane_first(2, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(s.projector().at(i, j) == ((i == j && i < 2) ? Dyadic(1) : Dyadic(0)));
}

TEST_CASE("projector via the general solve") {
    // Non-orthogonal rows spanning the xy-plane of R^3.
    Subspace s(ScaledIntMatrix::from_rows({{1, 0, 0}, {1, 1, 0}}));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(s.projector().at(i, j) == ((i == j && i < 2) ? Dyadic(1) : Dyadic(0)));
}

TEST_CASE("projectors outside the dyadic ring are rejected") {
    CHECK_THROWS_AS(Subspace(ScaledIntMatrix::from_rows({{1, 2}})), ring_error);
    CHECK_THROWS_AS(Subspace(ScaledIntMatrix::from_rows({{1, 1, 0}, {1, 0, 1}})), ring_error);
}

TEST_CASE("rank-deficient generators are rejected") {
    CHECK_THROWS_AS(Subspace(ScaledIntMatrix::from_rows({{1, 1}, {2, 2}})), rank_error);
}

TEST_CASE("the eighteen fixture planes have distinct projectors") {
    auto planes = eighteen_planes();
    REQUIRE(planes.size() == 18);
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (std::size_t j = i + 1; j < planes.size(); ++j) CHECK(planes[i] != planes[j]);
}

TEST_CASE("every projector is symmetric idempotent with trace n") {
    for (const Subspace& s : eighteen_planes()) {
        const RationalMatrix& p = s.projector();
        CHECK(p.is_symmetric());
        CHECK(p * p == p);
        CHECK(p.trace() == Dyadic(s.dim()));
    }
}

TEST_CASE("orthogonal complement on lines of R^2") {
    Subspace e1(ScaledIntMatrix::from_rows({{1, 0}}));
    CHECK(orthogonal_complement(e1).generator() == ScaledIntMatrix::from_rows({{0, 1}}));

    Subspace diag(ScaledIntMatrix::from_rows({{1, 1}}));
    CHECK(orthogonal_complement(diag).generator() == ScaledIntMatrix::from_rows({{1, -1}}));
}

TEST_CASE("complement is an involution and sums to the identity") {
    for (const Subspace& s : eighteen_planes()) {
        Subspace c = orthogonal_complement(s);
        CHECK(c.dim() == s.ambient_dim() - s.dim());
        CHECK(c.projector() + s.projector() == RationalMatrix::identity(s.ambient_dim()));
        CHECK(orthogonal_complement(c) == s);
        // For n = m/2 the complement sits at the maximal distance n.
        CHECK(squared_distance(s, c) == Dyadic(s.dim()));
    }
}

TEST_CASE("squared distances in G(4,2)") {
    auto planes = eighteen_planes();
    Subspace a = coordinate_plane_first(2, 4);

    CHECK(squared_distance(a, a) == Dyadic(0));
    CHECK(squared_distance(planes[0], planes[1]) == Dyadic(2));  // orthogonal pair
    // The last eight fixture planes extend the identity by a signed monomial;
    // all sit at squared distance 1 from the first coordinate plane.
    for (std::size_t i = 10; i < 18; ++i) CHECK(squared_distance(a, planes[i]) == Dyadic(1));

    Subspace line(ScaledIntMatrix::from_rows({{1, 0}}));
    CHECK_THROWS_AS(squared_distance(a, line), dimension_error);
}

TEST_CASE("squared distance is symmetric, bounded by n, zero iff equal") {
    auto planes = eighteen_planes();
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (std::size_t j = i; j < planes.size(); ++j) {
            Dyadic dij = squared_distance(planes[i], planes[j]);
            CHECK(dij == squared_distance(planes[j], planes[i]));
            CHECK(dij <= Dyadic(2));
            CHECK((dij == Dyadic(0)) == (i == j));
        }
}

TEST_CASE("distance is invariant under the right action") {
    auto planes = eighteen_planes();
    const ScaledIntMatrix h2 = ScaledIntMatrix::from_rows({{1, 1}, {1, -1}}, 1);
    const std::vector<ScaledIntMatrix> rotations = {
        ScaledIntMatrix::identity(2).kron(h2),
        h2.kron(h2),
        ScaledIntMatrix::from_rows({{0, 1}, {1, 0}}).kron(ScaledIntMatrix::identity(2)),
        ScaledIntMatrix::from_rows(
            {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}}),
    };
    for (const auto& g : rotations) {
        REQUIRE(g.is_orthogonal());
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j)
                CHECK(squared_distance(act(planes[i], g), act(planes[j], g)) ==
                      squared_distance(planes[i], planes[j]));
    }
}

TEST_CASE("principal angle spectra in G(4,2)") {
    auto planes = eighteen_planes();
    Subspace a = coordinate_plane_first(2, 4);

    // Against a diagonal-type plane: one common direction, one orthogonal.
    auto pa = principal_angles(a, planes[2]);
    CHECK(pa.cos_squared == std::vector<Dyadic>{Dyadic(0), Dyadic(1)});

    // Against the orthogonal coordinate plane: both angles right angles.
    auto pb = principal_angles(a, planes[1]);
    CHECK(pb.cos_squared == std::vector<Dyadic>{Dyadic(0), Dyadic(0)});
    CHECK(pb.angles[0] == doctest::Approx(std::acos(0.0)));

    // Against a monomial-extended plane: all angles pi/4.
    auto pc = principal_angles(a, planes[10]);
    CHECK(pc.cos_squared == std::vector<Dyadic>{half(), half()});
}

TEST_CASE("principal angles all pi/4 in G(8,4)") {
    Subspace a = coordinate_plane_first(4, 8);
    Subspace b(ScaledIntMatrix::identity(4).hcat(ScaledIntMatrix::identity(4)));
    auto pa = principal_angles(a, b);
    CHECK(pa.cos_squared == std::vector<Dyadic>(4, half()));
}

TEST_CASE("spectrum hypothesis testing distinguishes rejection from failure") {
    auto planes = eighteen_planes();
    Subspace a = coordinate_plane_first(2, 4);
    std::vector<Dyadic> right = {half(), half()};
    std::vector<Dyadic> wrong = {Dyadic(0), Dyadic(1)};
    CHECK(confirm_cos_sq_spectrum(a, planes[10], right) == SpectrumCheck::confirmed);
    CHECK(confirm_cos_sq_spectrum(a, planes[10], wrong) == SpectrumCheck::rejected);
    CHECK_THROWS_AS(confirm_cos_sq_spectrum(a, planes[10], std::vector<Dyadic>{half()}),
                    grasspack::error);
}

TEST_CASE("floating angles agree with the exact distance") {
    auto planes = eighteen_planes();
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (std::size_t j = i + 1; j < planes.size(); ++j) {
            auto cos_sq = cos_sq_floating(planes[i], planes[j]);
            double sum_sin_sq = 0;
            for (double c : cos_sq) sum_sin_sq += 1.0 - c;
            CHECK(std::abs(sum_sin_sq -
                           squared_distance(planes[i], planes[j]).to_double()) < 1e-10);
        }
}

TEST_CASE("rankin bound values") {
    CHECK(rankin_bound(4, 2) == Fraction(1));
    CHECK(rankin_bound(8, 4) == Fraction(2));
    CHECK(rankin_bound(2, 1) == Fraction(BigInt(1), BigInt(2)));
    CHECK(rankin_bound(3, 1) == Fraction(BigInt(2), BigInt(3)));
    CHECK_THROWS_AS(rankin_bound(4, 4), dimension_error);
    CHECK_THROWS_AS(rankin_bound(4, 0), dimension_error);
}

TEST_CASE("bound applicability") {
    auto r1 = bound_applicability(4, 2, BigInt(18));
    CHECK(r1.applicable);
    CHECK(r1.equality_possible);
    auto r2 = bound_applicability(8, 4, BigInt(70));
    CHECK(r2.applicable);
    CHECK(r2.equality_possible);
    auto r3 = bound_applicability(4, 2, BigInt(10));  // N = m(m+1)/2 exactly
    CHECK_FALSE(r3.applicable);
    CHECK(r3.equality_possible);
}

TEST_CASE("packing statistics for the eighteen planes") {
    Packing packing(4, 2, eighteen_planes());
    const PairStats& st = packing.stats();
    CHECK(st.pair_count == 153);
    CHECK(st.min_d2 == Dyadic(1));
    REQUIRE(st.histogram.size() == 2);
    CHECK(st.histogram.at(Dyadic(1)) == 144);
    CHECK(st.histogram.at(Dyadic(2)) == 9);

    // Independent cross-check of the histogram through the floating channel.
    auto planes = eighteen_planes();
    int near_one = 0, near_two = 0;
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (std::size_t j = i + 1; j < planes.size(); ++j) {
            auto cos_sq = cos_sq_floating(planes[i], planes[j]);
            double d2 = 0;
            for (double c : cos_sq) d2 += 1.0 - c;
            if (std::abs(d2 - 1.0) < 1e-9)
                ++near_one;
            else if (std::abs(d2 - 2.0) < 1e-9)
                ++near_two;
        }
    CHECK(near_one == 144);
    CHECK(near_two == 9);

    auto report = packing.report();
    CHECK(report.all_passed());
    CHECK(report.data().at("meets_rankin_bound") == "true");
}

TEST_CASE("four lines meeting the bound in the plane") {
    std::vector<Subspace> lines;
    lines.emplace_back(ScaledIntMatrix::from_rows({{1, 0}}));
    lines.emplace_back(ScaledIntMatrix::from_rows({{0, 1}}));
    lines.emplace_back(ScaledIntMatrix::from_rows({{1, 1}}));
    lines.emplace_back(ScaledIntMatrix::from_rows({{1, -1}}));
    Packing packing(2, 1, std::move(lines));
    CHECK(packing.stats().min_d2 == half());
    CHECK(Fraction(packing.stats().min_d2) == rankin_bound(2, 1));
}

TEST_CASE("duplicate subspaces are rejected") {
    std::vector<Subspace> members;
    members.emplace_back(ScaledIntMatrix::from_rows({{1, 0}}));
    members.emplace_back(ScaledIntMatrix::from_rows({{2, 0}}));  // same line, scaled generator
    CHECK_THROWS_AS(Packing(2, 1, std::move(members)), grasspack::error);
}

TEST_CASE("mixed dimensions are rejected") {
    std::vector<Subspace> members;
    members.emplace_back(ScaledIntMatrix::from_rows({{1, 0}}));
    members.emplace_back(ScaledIntMatrix::from_rows({{1, 0, 0}}));
    CHECK_THROWS_AS(Packing(2, 1, std::move(members)), dimension_error);
}
