#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "park/bigint.hpp"
#include "park/pf_core.hpp"

namespace park {

enum class Step : std::uint8_t { North, East };

// A lattice path from (0,0) built of unit north and east steps.
struct LatticePath {
    std::vector<Step> steps;

    int north_count() const;
    int east_count() const;

    // Runs (0,0) -> (n,n) and never dips below the diagonal y = x.
    bool is_dyck() const;
    // Runs (0,0) -> (n,n) but crosses below the diagonal somewhere.
    bool is_bad() const;

    bool operator==(const LatticePath&) const = default;
};

std::string to_word(const LatticePath& path);       // "N"/"E" characters
LatticePath path_from_word(const std::string& word);

bigint catalan(int n);

// All Dyck paths of semilength n, lexicographic with North < East.
std::vector<LatticePath> enumerate_dyck_paths(int n);

// First point P = (i+1, i) where the path sits strictly below the diagonal.
std::pair<int, int> first_crossing(const LatticePath& path);

// Swap north/east in the portion after the first crossing point, sending a
// bad (0,0)->(n,n) path to a (0,0)->(n+1,n-1) path. Rejects Dyck paths.
LatticePath reflect_bad_path(const LatticePath& path);

// Inverse of reflect_bad_path: defined on every (0,0)->(n+1,n-1) path.
LatticePath unreflect_path(const LatticePath& path);

struct LabeledDyckPath {
    LatticePath path;
    std::vector<int> labels;  // one per north step in path order; within a
                              // column they increase bottom to top

    bool operator==(const LabeledDyckPath&) const = default;
};

// Column i gets one north step per occurrence of i in prefs, labeled by the
// positions where i occurs, in increasing order.
LabeledDyckPath pf_to_labeled_dyck(const Prefs& prefs);

// Inverse: position j prefers spot i when label j sits in column i.
Prefs labeled_dyck_to_pf(const LabeledDyckPath& ld);

} // namespace park
