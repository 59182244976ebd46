#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "paspt/graph.hpp"

namespace paspt {

// Multiplicative (2k-1)-spanner, greedy construction: edges are scanned by
// nondecreasing (weight, id) and kept iff the current spanner distance
// between the endpoints exceeds (2k-1) times the edge weight.
struct Spanner {
    int k = 1;
    std::vector<int> edge_ids;  // kept edges, ascending
};

Spanner build_spanner(const WeightedGraph& g, int k);

// (2k-1)-approximate distance oracle with O(k)-entry queries, built from
// hierarchical center samples and per-vertex bunches. Sampling is seeded
// and deterministic. k = 1 stores exact all-pairs distances.
class SmallDistanceOracle {
public:
    SmallDistanceOracle() = default;
    SmallDistanceOracle(const WeightedGraph& g, int k, std::uint64_t seed = 0x5eed0u);

    struct Stats {
        int lookups = 0;
    };

    // Approximate distance; kUnreachable for disconnected pairs.
    Weight distance(int u, int v, Stats* stats = nullptr) const;

    // Walk u -> v realizing distance(u, v) exactly, as a vertex sequence.
    // Empty if unreachable (or u == v).
    std::vector<int> path(int u, int v) const;

    int k() const { return k_; }

private:
    struct BunchEntry {
        Weight dist;
        int pred;  // predecessor of the keyed vertex on the center->vertex path
    };

    int k_ = 1;
    int n_ = 0;
    std::vector<int> center_level_;                            // top sample level per vertex
    std::vector<std::vector<int>> witness_;                    // witness_[i][v]: nearest level-i center
    std::vector<std::vector<Weight>> witness_dist_;
    std::vector<std::unordered_map<int, BunchEntry>> bunch_;   // per vertex: center -> entry

    // Common query core: finds the meeting center w with u', v' its two
    // sides; returns false when the pair is disconnected.
    bool meet(int u, int v, int& w, int& su, int& sv, Stats* stats) const;
    std::vector<int> walk_from_center(int w, int v) const;
};

}  // namespace paspt
