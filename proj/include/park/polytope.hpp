#pragma once

#include <utility>
#include <vector>

#include "park/bigint.hpp"
#include "park/pf_core.hpp"

namespace park {

// Parking functions as integer points; purely combinatorial vertex theory,
// no floating point and no hull computation anywhere.
using LatticePoint = std::vector<int>;

// A parking function is a polytope vertex exactly when its sorted form is
// (1,...,1, k+1, k+2, ..., n) for some 1 <= k <= n.
bool is_vertex(const LatticePoint& point);

// All vertices of the length-n polytope, lexicographic.
std::vector<LatticePoint> enumerate_vertices(int n);

// sum_{k=1..n} n!/k!, exact integer arithmetic.
bigint vertex_count(int n);

// For a non-vertex parking function: the pair (point + e_i, point - e_i)
// witnessing it as a midpoint, with i the smallest coordinate > 1 whose
// increment stays a parking function. Errors on vertices.
std::pair<LatticePoint, LatticePoint> midpoint_witness(const LatticePoint& point);

// All n! permutations of (1..n), lexicographic.
std::vector<LatticePoint> permutahedron_vertices(int n);

// Adjacent iff the coordinates differ by swapping two entries with
// consecutive values, i.e. the identified permutations differ by an
// adjacent transposition.
bool permutahedron_adjacent(const LatticePoint& u, const LatticePoint& v);

struct PermutahedronGraph {
    int n = 0;
    std::vector<LatticePoint> vertices;      // lexicographic
    std::vector<std::pair<int, int>> edges;  // (i, j) with i < j, sorted
};

PermutahedronGraph permutahedron_graph(int n);

} // namespace park
