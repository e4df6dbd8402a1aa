#include "park/polytope.hpp"

#include <algorithm>
#include <cstdlib>

#include "park/errors.hpp"

namespace park {

namespace {

void require_parking(const LatticePoint& point) {
    if (!is_parking_function(point))
        throw domain_error("not_parking_function", "point is not a parking function");
}

} // namespace

bool is_vertex(const LatticePoint& point) {
    require_parking(point);
    const int n = static_cast<int>(point.size());
    LatticePoint sorted = point;
    std::sort(sorted.begin(), sorted.end());
    int k = 0;
    while (k < n && sorted[k] == 1) ++k;
    // sorted form must be (1^k, k+1, k+2, ..., n)
    for (int i = k; i < n; ++i)
        if (sorted[i] != i + 1) return false;
    return true;
}

std::vector<LatticePoint> enumerate_vertices(int n) {
    if (n < 1) throw domain_error("bad_length", "dimension must be at least 1");
    std::vector<LatticePoint> out;
    for (int k = 1; k <= n; ++k) {
        LatticePoint base(n);
        for (int i = 0; i < k; ++i) base[i] = 1;
        for (int i = k; i < n; ++i) base[i] = i + 1;
        do {
            out.push_back(base);
        } while (std::next_permutation(base.begin(), base.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bigint vertex_count(int n) {
    if (n < 1) throw domain_error("bad_length", "dimension must be at least 1");
    // sum of n!/k! for k = 1..n; the k = n term is 1, and stepping k down
    // multiplies the term by k
    bigint total = 0, term = 1;
    for (int k = n; k >= 1; --k) {
        total += term;
        term *= k;
    }
    return total;
}

std::pair<LatticePoint, LatticePoint> midpoint_witness(const LatticePoint& point) {
    require_parking(point);
    if (is_vertex(point))
        throw domain_error("vertex_has_no_witness",
                           "point is a vertex; it is not a midpoint of lattice neighbors");
    const int n = static_cast<int>(point.size());
    for (int i = 0; i < n; ++i) {
        if (point[i] <= 1 || point[i] + 1 > n) continue;
        LatticePoint up = point;
        ++up[i];
        if (!is_parking_function(up)) continue;
        LatticePoint down = point;
        --down[i];  // lowering an entry of a parking function keeps it parking
        return {std::move(up), std::move(down)};
    }
    throw std::logic_error("non-vertex parking function with no bumpable coordinate");
}

std::vector<LatticePoint> permutahedron_vertices(int n) {
    if (n < 1) throw domain_error("bad_length", "dimension must be at least 1");
    LatticePoint base(n);
    for (int i = 0; i < n; ++i) base[i] = i + 1;
    std::vector<LatticePoint> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

bool permutahedron_adjacent(const LatticePoint& u, const LatticePoint& v) {
    if (u.size() != v.size())
        throw domain_error("ground_mismatch", "points have different dimensions");
    // swap of two coordinates holding consecutive values, i.e. an adjacent
    // transposition of the identified permutations
    int first = -1, second = -1;
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] == v[i]) continue;
        if (first < 0)
            first = static_cast<int>(i);
        else if (second < 0)
            second = static_cast<int>(i);
        else
            return false;
    }
    if (second < 0) return false;
    return u[first] == v[second] && u[second] == v[first] &&
           std::abs(u[first] - u[second]) == 1;
}

PermutahedronGraph permutahedron_graph(int n) {
    PermutahedronGraph g;
    g.n = n;
    g.vertices = permutahedron_vertices(n);
    // neighbors generated directly: swap the positions of values v, v+1
    std::vector<int> position(n + 2, 0);
    for (size_t a = 0; a < g.vertices.size(); ++a) {
        const auto& u = g.vertices[a];
        for (int i = 0; i < n; ++i) position[u[i]] = i;
        for (int v = 1; v < n; ++v) {
            LatticePoint w = u;
            std::swap(w[position[v]], w[position[v + 1]]);
            auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), w);
            auto b = static_cast<size_t>(it - g.vertices.begin());
            if (a < b) g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

} // namespace park
