// Compares the serial reference counting path against the OpenMP-partitioned
// kernels on the largest desk-scale instances.

#include "takacs/enumerate.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double time_ms(F&& fn, std::uint64_t& result) {
    auto start = std::chrono::steady_clock::now();
    result = fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void bench(const char* name, std::uint64_t (*serial)(), std::uint64_t (*parallel)()) {
    std::uint64_t serial_count = 0;
    std::uint64_t parallel_count = 0;
    double serial_ms = time_ms(serial, serial_count);
    double parallel_ms = time_ms(parallel, parallel_count);
    std::printf("%-24s serial %10.1f ms   parallel %10.1f ms   speedup %.2fx   count %llu\n",
                name, serial_ms, parallel_ms, serial_ms / parallel_ms,
                static_cast<unsigned long long>(serial_count));
    if (serial_count != parallel_count) {
        std::printf("  MISMATCH: parallel count %llu\n",
                    static_cast<unsigned long long>(parallel_count));
    }
}

int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

int main() {
    std::printf("threads available: %d\n", hardware_threads());
    bench(
        "unrooted forests n=8", +[] { return takacs::count_unrooted_forests(8, 1); },
        +[] { return takacs::count_unrooted_forests(8, hardware_threads()); });
    bench(
        "ppr forests n=8", +[] { return takacs::count_ppr_forests(8, std::nullopt, 1); },
        +[] { return takacs::count_ppr_forests(8, std::nullopt, hardware_threads()); });
    bench(
        "rooted forests m=8 k=1",
        +[] { return takacs::count_rooted_forests(8, {1}, 1); },
        +[] { return takacs::count_rooted_forests(8, {1}, hardware_threads()); });
    return 0;
}
