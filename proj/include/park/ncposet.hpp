#pragma once

#include <utility>
#include <vector>

#include "park/pf_core.hpp"

namespace park {

// A partition of {1..ground} into disjoint nonempty blocks, kept canonical:
// each block sorted ascending, blocks ordered by their minima.
class SetPartition {
public:
    SetPartition(int ground, std::vector<std::vector<int>> blocks);

    static SetPartition singletons(int ground);
    static SetPartition one_block(int ground);

    int ground() const { return ground_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    // element -> index of its block, as a lookup table indexed 1..ground.
    std::vector<int> block_of() const;

    bool operator==(const SetPartition&) const = default;

private:
    int ground_;
    std::vector<std::vector<int>> blocks_;
};

// No a < b < c < d with a,c in one block and b,d in another. Runs over block
// pairs counting ownership alternations in merged order; the quadruple
// definition itself is kept as a test oracle.
bool is_noncrossing(const SetPartition& p);

// All noncrossing partitions of [n], ordered by block count descending and
// then by block-sequence lexicographic order.
std::vector<SetPartition> enumerate_noncrossing(int n);

// Every block of p is contained in a block of q.
bool refines(const SetPartition& p, const SetPartition& q);

// q arises from p by merging exactly two blocks and stays noncrossing.
// Both arguments must be noncrossing.
bool covers(const SetPartition& p, const SetPartition& q);

// For the merged blocks A, B with min A < min B: the largest element of A
// smaller than min B.
int chain_label(const SetPartition& p, const SetPartition& q);

struct HasseDiagram {
    int ground = 0;
    std::vector<SetPartition> nodes;         // enumerate_noncrossing order
    std::vector<std::pair<int, int>> edges;  // (finer id, coarser id), sorted
    std::vector<int> ranks;                  // ground - block_count per node
};

HasseDiagram hasse_diagram(int n);

// A saturated chain from the all-singletons partition to the one-block
// partition: ground partitions, one block merge per step.
struct MaximalChain {
    std::vector<SetPartition> partitions;

    // The merge labels of the ground-1 steps.
    std::vector<int> labels() const;

    bool operator==(const MaximalChain&) const = default;
};

void validate_chain(const MaximalChain& chain);

// All maximal chains of NC_ground, depth-first over cover moves in block
// index order.
std::vector<MaximalChain> enumerate_maximal_chains(int ground);

// Label sequence of a chain of NC_{n+1}; always a parking function of
// length n.
Prefs chain_to_pf(const MaximalChain& chain);

// The unique chain of NC_{n+1} whose labels reproduce prefs, found by
// label-pruned depth-first search over cover moves.
MaximalChain pf_to_chain(const Prefs& prefs);

} // namespace park
