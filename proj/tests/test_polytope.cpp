#include "doctest.h"

#include <algorithm>
#include <set>

#include "park/errors.hpp"
#include "park/polytope.hpp"

using namespace park;

namespace {

bool parks_after_bump(LatticePoint p, int i) {
    int n = static_cast<int>(p.size());
    if (p[i] + 1 > n) return false;  // entries above n can never park
    ++p[i];
    return is_parking_function(p);
}

} // namespace

TEST_SUITE("polytope") {

TEST_CASE("is_vertex: examples") {
    CHECK(is_vertex({1, 1, 3}));
    CHECK(is_vertex({1, 3, 1}));
    CHECK(is_vertex({3, 1, 1}));
    CHECK(is_vertex({1, 1, 1}));
    CHECK_FALSE(is_vertex({1, 1, 2}));
    CHECK_THROWS_AS(is_vertex({2, 2, 3}), domain_error);  // not a parking function
}

TEST_CASE("the ten vertices of the length-3 polytope") {
    std::set<LatticePoint> expected{
        {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1},
        {1, 1, 3}, {1, 3, 1}, {3, 1, 1},
        {1, 1, 1},
    };
    auto verts = enumerate_vertices(3);
    CHECK(std::set<LatticePoint>(verts.begin(), verts.end()) == expected);
    CHECK(verts.size() == 10);
    CHECK(std::is_sorted(verts.begin(), verts.end()));
    CHECK(vertex_count(3) == 10);
}

TEST_CASE("vertex counts: n!(1/1! + ... + 1/n!)") {
    CHECK(vertex_count(1) == 1);
    CHECK(vertex_count(4) == 41);
    CHECK(vertex_count(6) == 1237);
    CHECK(enumerate_vertices(1) == std::vector<LatticePoint>{{1}});
    for (int n = 1; n <= 7; ++n) {
        auto verts = enumerate_vertices(n);
        CHECK(bigint(verts.size()) == vertex_count(n));
        CHECK(std::adjacent_find(verts.begin(), verts.end()) == verts.end());
        for (const auto& v : verts) REQUIRE(is_parking_function(v));
    }
    CHECK_THROWS_AS(vertex_count(0), domain_error);
}

TEST_CASE("vertices filtered out of the full enumeration, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<LatticePoint> filtered;
        for (const auto& w : enumerate_parking_functions(n))
            if (is_vertex(w)) filtered.push_back(w);
        CHECK(filtered == enumerate_vertices(n));
    }
}

TEST_CASE("vertex set is closed under rearrangement, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        auto verts = enumerate_vertices(n);
        std::set<LatticePoint> vset(verts.begin(), verts.end());
        std::set<LatticePoint> sorted_forms;
        for (const auto& v : verts) {
            auto s = v;
            std::sort(s.begin(), s.end());
            sorted_forms.insert(s);
        }
        for (auto s : sorted_forms) {
            do {
                REQUIRE(vset.count(s) == 1);
            } while (std::next_permutation(s.begin(), s.end()));
        }
    }
}

TEST_CASE("midpoint witness: examples") {
    auto [up, down] = midpoint_witness({1, 1, 2});
    CHECK(up == LatticePoint{1, 1, 3});
    CHECK(down == LatticePoint{1, 1, 1});

    auto [up2, down2] = midpoint_witness({1, 2, 2});
    CHECK(up2 == LatticePoint{1, 3, 2});  // smallest bumpable index is 2
    CHECK(down2 == LatticePoint{1, 1, 2});

    CHECK_THROWS_AS(midpoint_witness({1, 1, 1}), domain_error);   // vertex
    CHECK_THROWS_AS(midpoint_witness({1, 2, 3}), domain_error);   // vertex
    CHECK_THROWS_AS(midpoint_witness({2, 2, 3}), domain_error);   // not a parking function
}

TEST_CASE("every parking function is a vertex xor has a midpoint witness, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& w : enumerate_parking_functions(n)) {
            CAPTURE(w);
            if (is_vertex(w)) {
                REQUIRE_THROWS_AS(midpoint_witness(w), domain_error);
                // no bump of an entry > 1 stays inside the parking functions
                for (size_t i = 0; i < w.size(); ++i)
                    if (w[i] > 1) REQUIRE_FALSE(parks_after_bump(w, static_cast<int>(i)));
            } else {
                auto [up, down] = midpoint_witness(w);
                REQUIRE(is_parking_function(up));
                REQUIRE(is_parking_function(down));
                for (size_t i = 0; i < w.size(); ++i)
                    REQUIRE(up[i] + down[i] == 2 * w[i]);  // exact midpoint
                bool some_bump = false;
                for (size_t i = 0; i < w.size(); ++i)
                    some_bump = some_bump || (w[i] > 1 && parks_after_bump(w, static_cast<int>(i)));
                REQUIRE(some_bump);
            }
        }
    }
}

TEST_CASE("permutahedron: hexagon matches the label cycle") {
    auto g = permutahedron_graph(3);
    REQUIRE(g.vertices.size() == 6);
    CHECK(g.edges.size() == 6);

    auto adjacent = [&](const LatticePoint& a, const LatticePoint& b) {
        return permutahedron_adjacent(a, b);
    };
    // walk the printed hexagon: 213, 312, 321, 231, 132, 123, back to 213
    std::vector<LatticePoint> cycle{
        {2, 1, 3}, {3, 1, 2}, {3, 2, 1}, {2, 3, 1}, {1, 3, 2}, {1, 2, 3}};
    for (size_t i = 0; i < cycle.size(); ++i) {
        CHECK(adjacent(cycle[i], cycle[(i + 1) % cycle.size()]));
        CHECK_FALSE(adjacent(cycle[i], cycle[(i + 2) % cycle.size()]));
        CHECK_FALSE(adjacent(cycle[i], cycle[(i + 3) % cycle.size()]));
    }
    CHECK_FALSE(adjacent({1, 2, 3}, {1, 2, 3}));
}

TEST_CASE("permutahedron: counts, degrees, connectivity") {
    auto g4 = permutahedron_graph(4);
    CHECK(g4.vertices.size() == 24);
    std::vector<int> degree(24, 0);
    for (auto [a, b] : g4.edges) {
        ++degree[a];
        ++degree[b];
    }
    for (int d : degree) CHECK(d == 3);

    for (int n = 1; n <= 5; ++n) {
        auto g = permutahedron_graph(n);
        std::uint64_t fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        REQUIRE(g.vertices.size() == fact);
        // breadth-first reachability
        std::vector<std::vector<int>> adj(g.vertices.size());
        for (auto [a, b] : g.edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<char> seen(g.vertices.size(), 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (int next : adj[queue[qi]])
                if (!seen[next]) {
                    seen[next] = 1;
                    queue.push_back(next);
                }
        REQUIRE(queue.size() == g.vertices.size());
    }
}

} // TEST_SUITE
