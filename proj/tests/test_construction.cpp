#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "grasspack/construction.hpp"
#include "grasspack/errors.hpp"

#include "eq4_fixture.hpp"

using namespace grasspack;

TEST_CASE("monomial family base case") {
    auto fam = build_monomials(1);
    REQUIRE(fam.matrices.size() == 2);
    CHECK(fam.matrices[0] == ScaledIntMatrix::from_rows({{1}}));
    CHECK(fam.matrices[1] == ScaledIntMatrix::from_rows({{-1}}));
    CHECK_THROWS_AS(build_monomials(0), grasspack::error);
}

TEST_CASE("monomial family counts and structure") {
    auto f2 = build_monomials(2);
    CHECK(f2.matrices.size() == 8);  // all signed 2x2 monomial matrices
    for (const auto& q : f2.matrices) {
        CHECK(q.rows() == 2);
        CHECK(q.is_signed_monomial());
        CHECK(q.is_orthogonal());
    }
    CHECK(build_monomials(3).matrices.size() == 32);
    CHECK(build_monomials(4).matrices.size() == 128);
}

TEST_CASE("family counts for the first levels") {
    CHECK(build_family(1).packing.size() == 4);
    CHECK(build_family(2).packing.size() == 18);
    CHECK(build_family(3).packing.size() == 70);
    CHECK_THROWS_AS(build_family(0), grasspack::error);
}

TEST_CASE("level one is the four-line configuration") {
    auto fam = build_family(1);
    REQUIRE(fam.packing.size() == 4);
    CHECK(fam.packing.at(0).generator() == ScaledIntMatrix::from_rows({{1, 0}}));
    CHECK(fam.packing.at(1).generator() == ScaledIntMatrix::from_rows({{0, 1}}));
    CHECK(fam.packing.at(2).generator() == ScaledIntMatrix::from_rows({{1, 1}}));
    CHECK(fam.packing.at(3).generator() == ScaledIntMatrix::from_rows({{1, -1}}));
}

TEST_CASE("level two equals the published eighteen planes as a set") {
    auto fam = build_family(2);
    auto fixture = eighteen_planes();
    REQUIRE(fam.packing.size() == fixture.size());
    for (const Subspace& s : fixture) CHECK(fam.packing.contains(s));
    for (const Subspace& s : fam.packing.members()) {
        bool found = false;
        for (const Subspace& f : fixture)
            if (f == s) found = true;
        CHECK(found);
    }
}

TEST_CASE("family generators are sign matrices with orthogonal rows") {
    for (int level = 1; level <= 4; ++level) {
        auto fam = build_family(level);
        for (const Subspace& s : fam.packing.members()) {
            const ScaledIntMatrix& g = s.generator();
            CHECK(g.rows() == 1 << (level - 1));
            CHECK(g.cols() == 1 << level);
            CHECK(g.sqrt2_exponent() == 0);
            for (const BigInt& e : g.entries()) CHECK(boost::multiprecision::abs(e) <= 1);
            CHECK(g.has_orthogonal_rows());
        }
    }
}

TEST_CASE("coordinate subspaces are complements at maximal distance") {
    for (int level = 1; level <= 4; ++level) {
        auto fam = build_family(level);
        const Subspace& first = fam.packing.at(0);
        const Subspace& second = fam.packing.at(1);
        CHECK(squared_distance(first, second) == Dyadic(1 << (level - 1)));
        CHECK(orthogonal_complement(first) == second);
    }
}

TEST_CASE("per-member distance profiles are identical") {
    for (int level = 1; level <= 4; ++level) {
        auto fam = build_family(level);
        const auto& members = fam.packing.members();
        std::map<Dyadic, int> reference;
        for (std::size_t i = 0; i < members.size(); ++i) {
            std::map<Dyadic, int> profile;
            for (std::size_t j = 0; j < members.size(); ++j) {
                if (i == j) continue;
                ++profile[squared_distance(members[i], members[j])];
            }
            if (i == 0)
                reference = profile;
            else
                CHECK(profile == reference);
        }
    }
}

TEST_CASE("theorem verification at the first three levels") {
    for (int level = 1; level <= 3; ++level) {
        auto rep = verify_theorem(level);
        INFO(rep.summary());
        CHECK(rep.all_passed());
    }
}

TEST_CASE("exhaustive and transitive verification agree") {
    auto exhaustive = verify_theorem(3, SweepMode::exhaustive);
    auto transitive = verify_theorem(3, SweepMode::transitive);
    CHECK(exhaustive.all_passed());
    CHECK(transitive.all_passed());
}
