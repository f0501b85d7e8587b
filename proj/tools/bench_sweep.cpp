// Benchmark: serial reference sweep vs the OpenMP pair-sweep kernel.
// Usage: bench_sweep [family] [level]   (defaults: main 4)

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "grasspack/construction.hpp"
#include "grasspack/families.hpp"
#include "grasspack/sweep.hpp"

using namespace grasspack;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::string family = argc > 1 ? argv[1] : "main";
    int level = argc > 2 ? std::atoi(argv[2]) : 4;

    Packing packing = [&] {
        if (family == "lines") return realize(OrbitFamily::lines, level);
        if (family == "planes2") return realize(OrbitFamily::planes_2, level);
        if (family == "quarter") return realize(OrbitFamily::quarter, level);
        return build_family(level).packing;
    }();

    const std::uint64_t pairs =
        static_cast<std::uint64_t>(packing.size()) * (packing.size() - 1) / 2;
    std::printf("%s level %d: N = %zu, %llu pairs, G(%d,%d)\n", family.c_str(), level,
                packing.size(), static_cast<unsigned long long>(pairs), packing.ambient_dim(),
                packing.dim());

    auto t0 = Clock::now();
    PairStats serial = pair_sweep_serial(packing.members());
    double serial_s = seconds_since(t0);
    std::printf("%-28s %8.3fs  (min d^2 = %s)\n", "serial reference", serial_s,
                serial.min_d2.str().c_str());

#ifdef _OPENMP
    int max_threads = omp_get_max_threads();
#else
    int max_threads = 1;
#endif
    for (int threads = 1; threads <= max_threads; threads *= 2) {
        auto t1 = Clock::now();
        PairStats parallel = pair_sweep_parallel(packing.members(), threads);
        double par_s = seconds_since(t1);
        bool same = parallel.min_d2 == serial.min_d2 && parallel.histogram == serial.histogram;
        std::printf("parallel kernel, %2d thread%s %8.3fs  speedup %5.2fx  results %s\n", threads,
                    threads == 1 ? " " : "s", par_s, serial_s / par_s,
                    same ? "identical" : "DIFFER");
        if (!same) return 1;
    }
    return 0;
}
