#pragma once

#include <optional>
#include <vector>

#include "park/bigint.hpp"

namespace park {

// A preference list: one preferred spot per car, 1-indexed throughout.
// Ordinary lists take entries in [1, n]; circular lists in [1, n+1].
using Prefs = std::vector<int>;

void validate_ordinary(const Prefs& prefs);
void validate_circular(const Prefs& prefs);

struct ParkingOutcome {
    std::vector<int> assignment;    // car -> spot; empty when parking failed
    std::optional<int> failed_car;  // first car that ran off the end
    std::vector<int> empty_spots;   // unoccupied spots at the moment of failure, sorted

    bool success() const { return !failed_car.has_value(); }
};

struct CircularOutcome {
    std::vector<int> assignment;    // car -> spot in [1, n+1]
    int empty_spot = 0;             // the unique spot left unoccupied
};

// Cars park in index order; each drives to its preferred spot and rolls
// forward to the first free one, never backward.
ParkingOutcome simulate_parking(const Prefs& prefs);

// Sorted-criterion membership test: the weakly increasing rearrangement b
// must satisfy b_i <= i. Deliberately does not run the simulation; the two
// are independent routes cross-checked by tests.
bool is_parking_function(const Prefs& prefs);

// All parking functions of length n in lexicographic order. Generated by
// expanding weakly increasing skeletons into their distinct permutations,
// which stays practical through n = 8.
std::vector<Prefs> enumerate_parking_functions(int n);

// Weakly increasing parking functions of length n, lexicographic.
std::vector<Prefs> enumerate_primitive(int n);

// One extra spot n+1 and a circular street: every car parks.
CircularOutcome simulate_circular(const Prefs& prefs);

// Shift a circular list down by its empty spot, giving an ordinary parking
// function. Residues land in [1, n+1], so ordinary inputs come back unchanged.
Prefs unwrap_circular(const Prefs& prefs);

// (n+1)^(n-1), exact.
bigint parking_function_count(int n);

} // namespace park
