#include "park/kernels.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "park/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace park::kernels {

namespace {

constexpr int kMaxScanLength = 15;  // keeps n^n and bitmask state in 64 bits

void require_scannable(int n) {
    if (n < 1 || n > kMaxScanLength)
        throw domain_error("bad_length", "scan length must be in [1, 15]");
}

std::uint64_t upow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// index -> preference list, most significant digit first so that numeric
// order matches lexicographic order
void decode(std::uint64_t index, int n, int base, int* prefs) {
    for (int i = n - 1; i >= 0; --i) {
        prefs[i] = static_cast<int>(index % base) + 1;
        index /= base;
    }
}

// allocation-free mirror of simulate_parking's success test
bool parks(const int* prefs, int n) {
    std::uint32_t occupied = 0;
    for (int car = 0; car < n; ++car) {
        int spot = prefs[car];
        while (spot <= n && (occupied >> spot & 1)) ++spot;
        if (spot > n) return false;
        occupied |= std::uint32_t{1} << spot;
    }
    return true;
}

// sorted criterion via counts: b_i <= i iff #(entries <= v) >= v for all v;
// tolerates circular entries up to n+1 (they simply fail the bound)
bool criterion(const int* prefs, int n) {
    int count[kMaxScanLength + 2] = {};
    for (int i = 0; i < n; ++i) ++count[prefs[i]];
    int cumulative = 0;
    for (int v = 1; v <= n; ++v) {
        cumulative += count[v];
        if (cumulative < v) return false;
    }
    return true;
}

int circular_empty_spot(const int* prefs, int n) {
    const int m = n + 1;
    std::uint32_t occupied = 0;
    for (int car = 0; car < n; ++car) {
        int spot = prefs[car];
        while (occupied >> spot & 1) spot = spot == m ? 1 : spot + 1;
        occupied |= std::uint32_t{1} << spot;
    }
    return std::countr_zero(~occupied >> 1) + 1;
}

// unwrapped list encoded as base-(n+2) digits; entries stay in [1, n+1]
std::uint64_t unwrap_key(const int* prefs, int n, bool* parking) {
    const int m = n + 1;
    const int k = circular_empty_spot(prefs, n);
    std::uint64_t key = 0;
    int alpha[kMaxScanLength];
    for (int i = 0; i < n; ++i) {
        int r = (prefs[i] - k) % m;
        if (r <= 0) r += m;
        alpha[i] = r;
        key = key * (m + 1) + static_cast<std::uint64_t>(r);
    }
    *parking = criterion(alpha, n);
    return key;
}

OracleScan oracle_scan_impl(int n, bool parallel) {
    require_scannable(n);
    const std::int64_t total = static_cast<std::int64_t>(upow(n, n));
    std::uint64_t parked = 0, disagreements = 0;
#pragma omp parallel for schedule(static) reduction(+ : parked, disagreements) if (parallel)
    for (std::int64_t index = 0; index < total; ++index) {
        int prefs[kMaxScanLength];
        decode(static_cast<std::uint64_t>(index), n, n, prefs);
        const bool simulated = parks(prefs, n);
        parked += simulated;
        disagreements += simulated != criterion(prefs, n);
    }
    return {static_cast<std::uint64_t>(total), parked, disagreements};
}

using FiberMap = std::unordered_map<std::uint64_t, std::uint32_t>;

FiberScan summarize(const FiberMap& fibers, std::uint64_t lists, bool all_parking) {
    FiberScan out;
    out.lists = lists;
    out.images = fibers.size();
    out.images_all_parking = all_parking;
    out.min_fiber = lists;
    for (const auto& [key, count] : fibers) {
        out.min_fiber = std::min<std::uint64_t>(out.min_fiber, count);
        out.max_fiber = std::max<std::uint64_t>(out.max_fiber, count);
    }
    return out;
}

FiberScan fiber_scan_impl(int n, bool parallel) {
    require_scannable(n);
    const std::int64_t total = static_cast<std::int64_t>(upow(n + 1, n));
    int thread_count = 1;
#ifdef _OPENMP
    if (parallel) thread_count = omp_get_max_threads();
#endif
    std::vector<FiberMap> maps(thread_count);
    std::vector<char> parking_flags(thread_count, 1);
#pragma omp parallel num_threads(thread_count) if (parallel)
    {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        FiberMap& local = maps[tid];
        bool local_all = true;
#pragma omp for schedule(static)
        for (std::int64_t index = 0; index < total; ++index) {
            int prefs[kMaxScanLength];
            decode(static_cast<std::uint64_t>(index), n, n + 1, prefs);
            bool parking = false;
            ++local[unwrap_key(prefs, n, &parking)];
            local_all = local_all && parking;
        }
        parking_flags[tid] = local_all;
    }
    FiberMap merged = std::move(maps[0]);
    bool all_parking = parking_flags[0] != 0;
    for (int t = 1; t < thread_count; ++t) {
        for (const auto& [key, count] : maps[t]) merged[key] += count;
        all_parking = all_parking && parking_flags[t];
    }
    return summarize(merged, static_cast<std::uint64_t>(total), all_parking);
}

// Partitions as bitmasks, one 32-bit word per block, ordered by lowest bit.
// Crossing test mirrors the block-pair alternation scan.
bool masks_cross(std::uint32_t a, std::uint32_t b) {
    int runs = 0, last = -1;
    for (std::uint32_t bits = a | b; bits; bits &= bits - 1) {
        int owner = a >> std::countr_zero(bits) & 1;
        if (owner != last) {
            ++runs;
            last = owner;
        }
    }
    return runs >= 4;
}

std::uint64_t chain_count_from(std::vector<std::uint32_t>& blocks) {
    const size_t count = blocks.size();
    if (count == 1) return 1;
    std::uint64_t total = 0;
    for (size_t i = 0; i < count; ++i) {
        for (size_t j = i + 1; j < count; ++j) {
            const std::uint32_t merged = blocks[i] | blocks[j];
            bool ok = true;
            for (size_t k = 0; ok && k < count; ++k)
                ok = k == i || k == j || !masks_cross(merged, blocks[k]);
            if (!ok) continue;
            std::vector<std::uint32_t> next;
            next.reserve(count - 1);
            for (size_t k = 0; k < count; ++k)
                if (k != i && k != j) next.push_back(blocks[k]);
            next.push_back(merged);
            total += chain_count_from(next);
        }
    }
    return total;
}

std::uint64_t chain_count_impl(int ground, bool parallel) {
    if (ground < 1 || ground > 31)
        throw domain_error("bad_length", "ground size must be in [1, 31]");
    if (ground == 1) return 1;
    // first merges from singletons: every pair, always noncrossing
    std::vector<std::pair<int, int>> first;
    for (int a = 1; a <= ground; ++a)
        for (int b = a + 1; b <= ground; ++b) first.emplace_back(a, b);
    std::uint64_t total = 0;
    const std::int64_t branches = static_cast<std::int64_t>(first.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : total) if (parallel)
    for (std::int64_t f = 0; f < branches; ++f) {
        auto [a, b] = first[f];
        std::vector<std::uint32_t> blocks;
        for (int x = 1; x <= ground; ++x)
            if (x != a && x != b) blocks.push_back(std::uint32_t{1} << x);
        blocks.push_back(std::uint32_t{1} << a | std::uint32_t{1} << b);
        total += chain_count_from(blocks);
    }
    return total;
}

} // namespace

OracleScan oracle_scan_serial(int n) { return oracle_scan_impl(n, false); }
OracleScan oracle_scan_parallel(int n) { return oracle_scan_impl(n, true); }

FiberScan fiber_scan_serial(int n) { return fiber_scan_impl(n, false); }
FiberScan fiber_scan_parallel(int n) { return fiber_scan_impl(n, true); }

std::uint64_t count_maximal_chains_serial(int ground) {
    return chain_count_impl(ground, false);
}
std::uint64_t count_maximal_chains_parallel(int ground) {
    return chain_count_impl(ground, true);
}

std::vector<Prefs> enumerate_parking_functions_parallel(int n) {
    const auto skeletons = enumerate_primitive(n);
    std::vector<std::vector<Prefs>> buckets(skeletons.size());
    const std::int64_t count = static_cast<std::int64_t>(skeletons.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < count; ++s) {
        Prefs w = skeletons[s];
        auto& bucket = buckets[s];
        do {
            bucket.push_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
    }
    std::vector<Prefs> out;
    size_t total = 0;
    for (const auto& bucket : buckets) total += bucket.size();
    out.reserve(total);
    for (auto& bucket : buckets)
        out.insert(out.end(), std::make_move_iterator(bucket.begin()),
                   std::make_move_iterator(bucket.end()));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace park::kernels
