// Times each exhaustive kernel in its serial-reference and OpenMP flavors
// and checks that both produce the same answer. `--full` scales the inputs
// up one notch.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "park/kernels.hpp"

using namespace park;
using Clock = std::chrono::steady_clock;

namespace {

int mismatches = 0;

template <typename F>
double time_ms(F&& f) {
    auto start = Clock::now();
    f();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s %12.1f %12.1f %9.2fx  %s\n", name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "ok" : "MISMATCH");
    if (!equal) ++mismatches;
}

void bench_oracle(int n) {
    kernels::OracleScan s, p;
    double ts = time_ms([&] { s = kernels::oracle_scan_serial(n); });
    double tp = time_ms([&] { p = kernels::oracle_scan_parallel(n); });
    row("oracle_scan n=" + std::to_string(n), ts, tp,
        s.parked == p.parked && s.disagreements == p.disagreements && s.disagreements == 0);
}

void bench_fibers(int n) {
    kernels::FiberScan s, p;
    double ts = time_ms([&] { s = kernels::fiber_scan_serial(n); });
    double tp = time_ms([&] { p = kernels::fiber_scan_parallel(n); });
    row("fiber_scan n=" + std::to_string(n), ts, tp,
        s.images == p.images && s.min_fiber == p.min_fiber && s.max_fiber == p.max_fiber &&
            s.images_all_parking && p.images_all_parking);
}

void bench_chains(int ground) {
    std::uint64_t s = 0, p = 0;
    double ts = time_ms([&] { s = kernels::count_maximal_chains_serial(ground); });
    double tp = time_ms([&] { p = kernels::count_maximal_chains_parallel(ground); });
    row("chain_count m=" + std::to_string(ground), ts, tp, s == p);
}

void bench_enumerate(int n) {
    std::vector<Prefs> s, p;
    double ts = time_ms([&] { s = enumerate_parking_functions(n); });
    double tp = time_ms([&] { p = kernels::enumerate_parking_functions_parallel(n); });
    row("enumerate_pf n=" + std::to_string(n), ts, tp, s == p);
}

} // namespace

int main(int argc, char** argv) {
    bool full = argc > 1 && std::strcmp(argv[1], "--full") == 0;

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("threads: %d\n", threads);
    std::printf("%-28s %12s %12s %10s\n", "kernel", "serial ms", "parallel ms", "speedup");

    bench_oracle(6);
    bench_fibers(6);
    bench_chains(7);
    bench_enumerate(7);
    if (full) {
        bench_oracle(7);
        bench_fibers(7);
        bench_chains(8);
        bench_enumerate(8);
    }

    if (mismatches) std::printf("%d kernel(s) disagreed with the serial reference\n", mismatches);
    return mismatches;
}
