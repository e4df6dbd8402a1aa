#include "park/pf_core.hpp"

#include <algorithm>
#include <string>

#include "park/errors.hpp"

namespace park {

namespace {

void validate_entries(const Prefs& prefs, int max_entry, const char* kind) {
    if (prefs.empty())
        throw domain_error("bad_prefs", std::string(kind) + " preference list must be nonempty");
    const int n = static_cast<int>(prefs.size());
    for (int i = 0; i < n; ++i) {
        if (prefs[i] < 1 || prefs[i] > max_entry)
            throw domain_error("bad_prefs",
                               std::string(kind) + " entry " + std::to_string(prefs[i]) +
                                   " at position " + std::to_string(i + 1) +
                                   " outside [1, " + std::to_string(max_entry) + "]");
    }
}

} // namespace

void validate_ordinary(const Prefs& prefs) {
    validate_entries(prefs, static_cast<int>(prefs.size()), "ordinary");
}

void validate_circular(const Prefs& prefs) {
    validate_entries(prefs, static_cast<int>(prefs.size()) + 1, "circular");
}

ParkingOutcome simulate_parking(const Prefs& prefs) {
    validate_ordinary(prefs);
    const int n = static_cast<int>(prefs.size());
    std::vector<char> occupied(n + 1, 0);
    ParkingOutcome outcome;
    outcome.assignment.reserve(n);
    for (int car = 0; car < n; ++car) {
        int spot = prefs[car];
        while (spot <= n && occupied[spot]) ++spot;
        if (spot > n) {
            outcome.assignment.clear();
            outcome.failed_car = car + 1;
            for (int s = 1; s <= n; ++s)
                if (!occupied[s]) outcome.empty_spots.push_back(s);
            return outcome;
        }
        occupied[spot] = 1;
        outcome.assignment.push_back(spot);
    }
    return outcome;
}

bool is_parking_function(const Prefs& prefs) {
    validate_ordinary(prefs);
    Prefs sorted = prefs;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] > static_cast<int>(i) + 1) return false;
    return true;
}

std::vector<Prefs> enumerate_primitive(int n) {
    if (n < 1) throw domain_error("bad_length", "length must be at least 1");
    std::vector<Prefs> out;
    Prefs cur(n);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        // weakly increasing with entry at position i (1-based) at most i
        for (int v = pos == 0 ? 1 : cur[pos - 1]; v <= pos + 1; ++v) {
            cur[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Prefs> enumerate_parking_functions(int n) {
    std::vector<Prefs> out;
    for (const auto& skeleton : enumerate_primitive(n)) {
        Prefs w = skeleton;
        do {
            out.push_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CircularOutcome simulate_circular(const Prefs& prefs) {
    validate_circular(prefs);
    const int n = static_cast<int>(prefs.size());
    const int m = n + 1;
    std::vector<char> occupied(m + 1, 0);
    CircularOutcome outcome;
    outcome.assignment.reserve(n);
    for (int car = 0; car < n; ++car) {
        int spot = prefs[car];
        while (occupied[spot]) spot = spot == m ? 1 : spot + 1;
        occupied[spot] = 1;
        outcome.assignment.push_back(spot);
    }
    for (int s = 1; s <= m; ++s)
        if (!occupied[s]) outcome.empty_spot = s;
    return outcome;
}

Prefs unwrap_circular(const Prefs& prefs) {
    const int k = simulate_circular(prefs).empty_spot;
    const int m = static_cast<int>(prefs.size()) + 1;
    Prefs alpha(prefs.size());
    for (size_t i = 0; i < prefs.size(); ++i) {
        int r = (prefs[i] - k) % m;
        if (r <= 0) r += m;  // representatives in [1, m]
        alpha[i] = r;
    }
    return alpha;
}

bigint parking_function_count(int n) {
    if (n < 1) throw domain_error("bad_length", "length must be at least 1");
    return ipow(static_cast<unsigned long>(n) + 1, static_cast<unsigned long>(n) - 1);
}

} // namespace park
