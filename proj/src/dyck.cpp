#include "park/dyck.hpp"

#include <algorithm>
#include <stdexcept>

#include "park/errors.hpp"

namespace park {

int LatticePath::north_count() const {
    return static_cast<int>(std::count(steps.begin(), steps.end(), Step::North));
}

int LatticePath::east_count() const {
    return static_cast<int>(steps.size()) - north_count();
}

bool LatticePath::is_dyck() const {
    int north = 0, east = 0;
    for (Step s : steps) {
        s == Step::North ? ++north : ++east;
        if (east > north) return false;
    }
    return north == east;
}

bool LatticePath::is_bad() const {
    if (north_count() != east_count()) return false;
    return !is_dyck();
}

std::string to_word(const LatticePath& path) {
    std::string word;
    word.reserve(path.steps.size());
    for (Step s : path.steps) word.push_back(s == Step::North ? 'N' : 'E');
    return word;
}

LatticePath path_from_word(const std::string& word) {
    LatticePath path;
    path.steps.reserve(word.size());
    for (char c : word) {
        if (c == 'N')
            path.steps.push_back(Step::North);
        else if (c == 'E')
            path.steps.push_back(Step::East);
        else
            throw std::invalid_argument(std::string("bad step character '") + c +
                                        "' in path word");
    }
    return path;
}

bigint catalan(int n) {
    if (n < 0) throw domain_error("bad_length", "order must be nonnegative");
    bigint c = binomial(2ul * n, n);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n) + 1);
    return c;
}

std::vector<LatticePath> enumerate_dyck_paths(int n) {
    if (n < 0) throw domain_error("bad_length", "order must be nonnegative");
    std::vector<LatticePath> out;
    std::vector<Step> cur;
    cur.reserve(2 * n);
    auto rec = [&](auto&& self, int north, int east) -> void {
        if (north == n && east == n) {
            out.push_back({cur});
            return;
        }
        if (north < n) {
            cur.push_back(Step::North);
            self(self, north + 1, east);
            cur.pop_back();
        }
        if (east < north) {
            cur.push_back(Step::East);
            self(self, north, east + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

namespace {

// index of the step after which the path first sits at (i+1, i); -1 if never
int crossing_index(const LatticePath& path) {
    int x = 0, y = 0;
    for (size_t i = 0; i < path.steps.size(); ++i) {
        path.steps[i] == Step::North ? ++y : ++x;
        if (x == y + 1) return static_cast<int>(i);
    }
    return -1;
}

LatticePath flip_after(const LatticePath& path, int index) {
    LatticePath out = path;
    for (size_t i = index + 1; i < out.steps.size(); ++i)
        out.steps[i] = out.steps[i] == Step::North ? Step::East : Step::North;
    return out;
}

} // namespace

std::pair<int, int> first_crossing(const LatticePath& path) {
    int idx = crossing_index(path);
    if (idx < 0)
        throw domain_error("no_crossing", "path never goes below the diagonal");
    int x = 0, y = 0;
    for (int i = 0; i <= idx; ++i) path.steps[i] == Step::North ? ++y : ++x;
    return {x, y};
}

LatticePath reflect_bad_path(const LatticePath& path) {
    if (path.steps.empty() || path.north_count() != path.east_count())
        throw domain_error("not_bad_path", "path must run from (0,0) to (n,n)");
    int idx = crossing_index(path);
    if (idx < 0)
        throw domain_error("not_bad_path",
                           "path stays above the diagonal; reflection is undefined");
    return flip_after(path, idx);
}

LatticePath unreflect_path(const LatticePath& path) {
    if (path.steps.empty() || path.east_count() != path.north_count() + 2)
        throw domain_error("bad_endpoint", "path must run from (0,0) to (n+1,n-1)");
    // endpoint lies below the diagonal, so a crossing always exists
    return flip_after(path, crossing_index(path));
}

LabeledDyckPath pf_to_labeled_dyck(const Prefs& prefs) {
    if (!is_parking_function(prefs))
        throw domain_error("not_parking_function", "input does not park");
    const int n = static_cast<int>(prefs.size());
    std::vector<std::vector<int>> positions(n + 1);
    for (int j = 0; j < n; ++j) positions[prefs[j]].push_back(j + 1);

    LabeledDyckPath ld;
    ld.path.steps.reserve(2 * n);
    ld.labels.reserve(n);
    for (int col = 1; col <= n; ++col) {
        for (int pos : positions[col]) {
            ld.path.steps.push_back(Step::North);
            ld.labels.push_back(pos);
        }
        ld.path.steps.push_back(Step::East);
    }
    return ld;
}

Prefs labeled_dyck_to_pf(const LabeledDyckPath& ld) {
    if (!ld.path.is_dyck())
        throw domain_error("not_dyck", "underlying path is not a Dyck path");
    const int n = ld.path.north_count();
    if (static_cast<int>(ld.labels.size()) != n)
        throw domain_error("bad_labels", "need one label per north step");

    std::vector<char> seen(n + 1, 0);
    for (int label : ld.labels) {
        if (label < 1 || label > n || seen[label])
            throw domain_error("bad_labels", "labels must form a permutation of 1..n");
        seen[label] = 1;
    }

    Prefs prefs(n);
    int column = 1, north_seen = 0, prev_in_column = 0;
    for (Step s : ld.path.steps) {
        if (s == Step::East) {
            ++column;
            prev_in_column = 0;
            continue;
        }
        int label = ld.labels[north_seen++];
        if (label <= prev_in_column)
            throw domain_error("bad_labels",
                               "labels must increase bottom to top within a column");
        prev_in_column = label;
        prefs[label - 1] = column;
    }
    return prefs;
}

} // namespace park
