#include "doctest.h"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "park/errors.hpp"
#include "park/kernels.hpp"
#include "park/ncposet.hpp"

using namespace park;
using namespace park::kernels;

// The parallel kernels must reproduce the serial reference bit for bit,
// whatever the thread count.
static void force_threads() {
#ifdef _OPENMP
    omp_set_num_threads(4);
#endif
}

TEST_SUITE("kernels") {

TEST_CASE("oracle scan: serial equals parallel and matches the enumerator") {
    force_threads();
    for (int n = 1; n <= 6; ++n) {
        auto serial = oracle_scan_serial(n);
        auto parallel = oracle_scan_parallel(n);
        CHECK(serial.lists == parallel.lists);
        CHECK(serial.parked == parallel.parked);
        CHECK(serial.disagreements == parallel.disagreements);
        CHECK(serial.disagreements == 0);
        CHECK(bigint(serial.parked) == parking_function_count(n));
        CHECK(serial.parked == enumerate_parking_functions(n).size());
    }
}

TEST_CASE("fiber scan: serial equals parallel, fibers all have size n+1") {
    force_threads();
    for (int n = 1; n <= 5; ++n) {
        auto serial = fiber_scan_serial(n);
        auto parallel = fiber_scan_parallel(n);
        CHECK(serial.lists == parallel.lists);
        CHECK(serial.images == parallel.images);
        CHECK(serial.min_fiber == parallel.min_fiber);
        CHECK(serial.max_fiber == parallel.max_fiber);
        CHECK(serial.images_all_parking == parallel.images_all_parking);

        CHECK(serial.images_all_parking);
        CHECK(serial.min_fiber == static_cast<std::uint64_t>(n) + 1);
        CHECK(serial.max_fiber == static_cast<std::uint64_t>(n) + 1);
        CHECK(bigint(serial.images) == parking_function_count(n));
    }
}

TEST_CASE("chain count: serial equals parallel and matches the enumerator") {
    force_threads();
    for (int ground = 1; ground <= 6; ++ground) {
        auto serial = count_maximal_chains_serial(ground);
        auto parallel = count_maximal_chains_parallel(ground);
        CHECK(serial == parallel);
        CHECK(serial == enumerate_maximal_chains(ground).size());
    }
    CHECK(count_maximal_chains_parallel(5) == 125);
    // m^(m-2) continues past what the enumerator materializes comfortably
    CHECK(count_maximal_chains_parallel(8) == 262144);
}

TEST_CASE("parallel enumeration emits the canonical lexicographic order") {
    force_threads();
    for (int n = 1; n <= 6; ++n) {
        CHECK(enumerate_parking_functions_parallel(n) == enumerate_parking_functions(n));
    }
}

TEST_CASE("scan bounds") {
    CHECK_THROWS_AS(oracle_scan_serial(0), domain_error);
    CHECK_THROWS_AS(fiber_scan_parallel(16), domain_error);
    CHECK_THROWS_AS(count_maximal_chains_serial(0), domain_error);
}

} // TEST_SUITE
