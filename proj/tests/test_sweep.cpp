#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grasspack/construction.hpp"
#include "grasspack/families.hpp"
#include "grasspack/sweep.hpp"

#include "eq4_fixture.hpp"

using namespace grasspack;

namespace {

void check_equal(const PairStats& a, const PairStats& b) {
    CHECK(a.pair_count == b.pair_count);
    CHECK(a.min_d2 == b.min_d2);
    CHECK(a.histogram == b.histogram);
}

}  // namespace

TEST_CASE("parallel sweep matches the serial reference") {
    auto planes = eighteen_planes();
    PairStats serial = pair_sweep_serial(planes);
    check_equal(serial, pair_sweep_parallel(planes));

    auto fam3 = build_family(3);
    check_equal(pair_sweep_serial(fam3.packing.members()),
                pair_sweep_parallel(fam3.packing.members()));

    Packing lines = realize(OrbitFamily::lines, 3);
    check_equal(pair_sweep_serial(lines.members()), pair_sweep_parallel(lines.members()));
}

TEST_CASE("sweep results are independent of the thread count") {
    auto fam3 = build_family(3);
    PairStats one = pair_sweep_parallel(fam3.packing.members(), 1);
    for (int threads : {2, 3, 4, 8}) {
        PairStats multi = pair_sweep_parallel(fam3.packing.members(), threads);
        check_equal(one, multi);
    }
}

TEST_CASE("sweeps handle mixed projector denominators") {
    // Lines with different row norms force distinct scale exponents.
    std::vector<Subspace> lines;
    lines.emplace_back(ScaledIntMatrix::from_rows({{1, 0, 0, 0}}));
    lines.emplace_back(ScaledIntMatrix::from_rows({{1, 1, 0, 0}}));
    lines.emplace_back(ScaledIntMatrix::from_rows({{1, 1, 1, 1}}));
    lines.emplace_back(ScaledIntMatrix::from_rows({{1, -1, 1, -1}}));
    PairStats serial = pair_sweep_serial(lines);
    PairStats parallel = pair_sweep_parallel(lines);
    check_equal(serial, parallel);
    CHECK(serial.pair_count == 6);
}

TEST_CASE("degenerate sweeps") {
    std::vector<Subspace> one;
    one.emplace_back(ScaledIntMatrix::from_rows({{1, 0}}));
    CHECK(pair_sweep_parallel(one).pair_count == 0);
    CHECK(pair_sweep_serial(one).pair_count == 0);
}
