#pragma once

#include <cstdint>
#include <vector>

#include "park/pf_core.hpp"

// Exhaustive-scan kernels over whole preference spaces. Each comes in a
// serial reference flavor and an OpenMP flavor that must produce identical
// results; the benchmark target compares their running times.
namespace park::kernels {

struct OracleScan {
    std::uint64_t lists = 0;          // n^n inputs scanned
    std::uint64_t parked = 0;         // lists where the simulation parks all cars
    std::uint64_t disagreements = 0;  // simulation success != sorted criterion
};

// Every w in [n]^n, simulated and tested against the sorted criterion.
OracleScan oracle_scan_serial(int n);
OracleScan oracle_scan_parallel(int n);

struct FiberScan {
    std::uint64_t lists = 0;      // (n+1)^n circular lists scanned
    std::uint64_t images = 0;     // distinct unwrapped parking functions
    std::uint64_t min_fiber = 0;  // smallest equivalence class
    std::uint64_t max_fiber = 0;  // largest equivalence class
    bool images_all_parking = true;
};

// Unwraps every circular list and sizes the rotation classes; each class
// should have exactly n+1 members landing on one parking function.
FiberScan fiber_scan_serial(int n);
FiberScan fiber_scan_parallel(int n);

// Maximal chains of NC_ground, counted without materializing chains.
std::uint64_t count_maximal_chains_serial(int ground);
std::uint64_t count_maximal_chains_parallel(int ground);

// Same output as park::enumerate_parking_functions; skeleton expansion is
// spread across threads and the merged result re-sorted into lex order.
std::vector<Prefs> enumerate_parking_functions_parallel(int n);

} // namespace park::kernels
