#include "park/ncposet.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "park/errors.hpp"

namespace park {

SetPartition::SetPartition(int ground, std::vector<std::vector<int>> blocks)
    : ground_(ground), blocks_(std::move(blocks)) {
    if (ground_ < 1)
        throw domain_error("bad_partition", "ground set must be nonempty");
    std::vector<char> seen(ground_ + 1, 0);
    size_t total = 0;
    for (auto& block : blocks_) {
        if (block.empty()) throw domain_error("bad_partition", "empty block");
        std::sort(block.begin(), block.end());
        for (int x : block) {
            if (x < 1 || x > ground_)
                throw domain_error("bad_partition",
                                   "element " + std::to_string(x) + " outside [1, " +
                                       std::to_string(ground_) + "]");
            if (seen[x])
                throw domain_error("bad_partition",
                                   "element " + std::to_string(x) + " appears twice");
            seen[x] = 1;
        }
        total += block.size();
    }
    if (total != static_cast<size_t>(ground_))
        throw domain_error("bad_partition", "blocks do not cover the ground set");
    // minima are distinct, so lexicographic block order == order by minimum
    std::sort(blocks_.begin(), blocks_.end());
}

SetPartition SetPartition::singletons(int ground) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(ground);
    for (int x = 1; x <= ground; ++x) blocks.push_back({x});
    return SetPartition(ground, std::move(blocks));
}

SetPartition SetPartition::one_block(int ground) {
    std::vector<int> all(ground);
    for (int x = 1; x <= ground; ++x) all[x - 1] = x;
    return SetPartition(ground, {std::move(all)});
}

std::vector<int> SetPartition::block_of() const {
    std::vector<int> id(ground_ + 1, -1);
    for (size_t b = 0; b < blocks_.size(); ++b)
        for (int x : blocks_[b]) id[x] = static_cast<int>(b);
    return id;
}

namespace {

// Two disjoint sorted blocks cross iff their merged order alternates
// ownership at least four times (an abab or baba pattern).
bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    int runs = 0, last = -1;
    while (i < a.size() || j < b.size()) {
        int owner;
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            owner = 0;
            ++i;
        } else {
            owner = 1;
            ++j;
        }
        if (owner != last) {
            ++runs;
            last = owner;
        }
    }
    return runs >= 4;
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> u;
    u.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

// Merging blocks i (smaller minimum) and j only creates crossings involving
// the union, so only those pairs need re-checking.
bool merge_keeps_noncrossing(const std::vector<std::vector<int>>& blocks, size_t i,
                             size_t j, const std::vector<int>& merged) {
    for (size_t k = 0; k < blocks.size(); ++k) {
        if (k == i || k == j) continue;
        if (blocks_cross(merged, blocks[k])) return false;
    }
    return true;
}

SetPartition merge_blocks(const SetPartition& p, size_t i, size_t j,
                          std::vector<int> merged) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(p.blocks().size() - 1);
    for (size_t k = 0; k < p.blocks().size(); ++k) {
        if (k == j) continue;
        if (k == i)
            blocks.push_back(std::move(merged));
        else
            blocks.push_back(p.blocks()[k]);
    }
    return SetPartition(p.ground(), std::move(blocks));
}

// largest element of a below min b; a has the smaller minimum
int merge_label(const std::vector<int>& a, const std::vector<int>& b) {
    auto it = std::lower_bound(a.begin(), a.end(), b.front());
    return *std::prev(it);
}

void require_noncrossing(const SetPartition& p, const char* role) {
    if (!is_noncrossing(p))
        throw domain_error("not_noncrossing",
                           std::string(role) + " partition has crossing blocks");
}

} // namespace

bool is_noncrossing(const SetPartition& p) {
    const auto& blocks = p.blocks();
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j)
            if (blocks_cross(blocks[i], blocks[j])) return false;
    return true;
}

std::vector<SetPartition> enumerate_noncrossing(int n) {
    if (n < 1) throw domain_error("bad_length", "ground set must be nonempty");
    std::vector<SetPartition> out;
    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, int element) -> void {
        if (element > n) {
            SetPartition p(n, blocks);
            if (is_noncrossing(p)) out.push_back(std::move(p));
            return;
        }
        // index-based: recursion grows and shrinks the block vector
        for (size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(element);
            self(self, element + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({element});
        self(self, element + 1);
        blocks.pop_back();
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const SetPartition& a, const SetPartition& b) {
        if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
        return a.blocks() < b.blocks();
    });
    return out;
}

bool refines(const SetPartition& p, const SetPartition& q) {
    if (p.ground() != q.ground())
        throw domain_error("ground_mismatch", "partitions live on different ground sets");
    auto id = q.block_of();
    for (const auto& block : p.blocks()) {
        int target = id[block.front()];
        for (int x : block)
            if (id[x] != target) return false;
    }
    return true;
}

bool covers(const SetPartition& p, const SetPartition& q) {
    require_noncrossing(p, "lower");
    require_noncrossing(q, "upper");
    return p.block_count() == q.block_count() + 1 && refines(p, q);
}

int chain_label(const SetPartition& p, const SetPartition& q) {
    if (!covers(p, q))
        throw domain_error("not_cover", "partitions do not form a cover pair");
    auto id = q.block_of();
    // the one block of q that splits into two blocks of p
    std::map<int, std::vector<const std::vector<int>*>> children;
    for (const auto& block : p.blocks()) children[id[block.front()]].push_back(&block);
    for (const auto& [qb, parts] : children) {
        if (parts.size() == 2) return merge_label(*parts[0], *parts[1]);
    }
    throw domain_error("not_cover", "no merged block found");  // unreachable
}

HasseDiagram hasse_diagram(int n) {
    HasseDiagram h;
    h.ground = n;
    h.nodes = enumerate_noncrossing(n);
    std::map<std::vector<std::vector<int>>, int> index;
    for (size_t i = 0; i < h.nodes.size(); ++i)
        index[h.nodes[i].blocks()] = static_cast<int>(i);
    h.ranks.reserve(h.nodes.size());
    for (const auto& node : h.nodes) h.ranks.push_back(n - node.block_count());
    for (size_t a = 0; a < h.nodes.size(); ++a) {
        const auto& blocks = h.nodes[a].blocks();
        for (size_t i = 0; i < blocks.size(); ++i)
            for (size_t j = i + 1; j < blocks.size(); ++j) {
                auto merged = sorted_union(blocks[i], blocks[j]);
                if (!merge_keeps_noncrossing(blocks, i, j, merged)) continue;
                auto q = merge_blocks(h.nodes[a], i, j, std::move(merged));
                h.edges.emplace_back(static_cast<int>(a), index.at(q.blocks()));
            }
    }
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

std::vector<int> MaximalChain::labels() const {
    std::vector<int> out;
    for (size_t i = 0; i + 1 < partitions.size(); ++i)
        out.push_back(chain_label(partitions[i], partitions[i + 1]));
    return out;
}

void validate_chain(const MaximalChain& chain) {
    if (chain.partitions.empty())
        throw domain_error("bad_chain", "chain has no partitions");
    const int ground = chain.partitions.front().ground();
    if (chain.partitions.size() != static_cast<size_t>(ground))
        throw domain_error("bad_chain", "a maximal chain of NC_n has exactly n partitions");
    if (!(chain.partitions.front() == SetPartition::singletons(ground)))
        throw domain_error("bad_chain", "chain must start at the all-singletons partition");
    for (size_t i = 0; i + 1 < chain.partitions.size(); ++i)
        if (!covers(chain.partitions[i], chain.partitions[i + 1]))
            throw domain_error("bad_chain",
                               "step " + std::to_string(i + 1) + " is not a cover");
}

std::vector<MaximalChain> enumerate_maximal_chains(int ground) {
    if (ground < 1) throw domain_error("bad_length", "ground set must be nonempty");
    std::vector<MaximalChain> out;
    MaximalChain cur;
    cur.partitions.reserve(ground);  // keeps references across pushes valid
    cur.partitions.push_back(SetPartition::singletons(ground));
    auto rec = [&](auto&& self) -> void {
        const SetPartition& p = cur.partitions.back();
        if (p.block_count() == 1) {
            out.push_back(cur);
            return;
        }
        const auto& blocks = p.blocks();
        for (size_t i = 0; i < blocks.size(); ++i)
            for (size_t j = i + 1; j < blocks.size(); ++j) {
                auto merged = sorted_union(blocks[i], blocks[j]);
                if (!merge_keeps_noncrossing(blocks, i, j, merged)) continue;
                cur.partitions.push_back(merge_blocks(p, i, j, std::move(merged)));
                self(self);
                cur.partitions.pop_back();
            }
    };
    rec(rec);
    return out;
}

Prefs chain_to_pf(const MaximalChain& chain) {
    validate_chain(chain);
    return chain.labels();
}

MaximalChain pf_to_chain(const Prefs& prefs) {
    if (!is_parking_function(prefs))
        throw domain_error("not_parking_function", "labels must form a parking function");
    const int n = static_cast<int>(prefs.size());
    MaximalChain chain;
    chain.partitions.reserve(n + 1);
    chain.partitions.push_back(SetPartition::singletons(n + 1));
    auto rec = [&](auto&& self, int step) -> bool {
        if (step == n) return true;
        const SetPartition& p = chain.partitions.back();
        const auto& blocks = p.blocks();
        for (size_t i = 0; i < blocks.size(); ++i)
            for (size_t j = i + 1; j < blocks.size(); ++j) {
                if (merge_label(blocks[i], blocks[j]) != prefs[step]) continue;
                auto merged = sorted_union(blocks[i], blocks[j]);
                if (!merge_keeps_noncrossing(blocks, i, j, merged)) continue;
                chain.partitions.push_back(merge_blocks(p, i, j, std::move(merged)));
                if (self(self, step + 1)) return true;
                chain.partitions.pop_back();
            }
        return false;
    };
    if (!rec(rec, 0))
        throw std::logic_error("label-pruned search found no chain for a parking function");
    return chain;
}

} // namespace park
