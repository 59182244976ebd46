#pragma once

#include <vector>

#include "paspt/spt.hpp"

namespace paspt {

// Constant-time lowest-common-ancestor queries over a ShortestPathTree,
// via Euler tour + sparse-table range minimum. O(n log n) preprocessing.
class LcaIndex {
public:
    LcaIndex() = default;
    explicit LcaIndex(const ShortestPathTree& t);

    // LCA of u and v, or -1 if either vertex is outside the tree.
    int lca(int u, int v) const;

private:
    std::vector<int> euler_;       // vertex at each tour position
    std::vector<int> depth_;       // level of euler_[i]
    std::vector<int> first_;       // first tour position of each vertex, -1 if absent
    std::vector<std::vector<int>> table_;  // table_[j][i]: argmin position over [i, i+2^j)
    std::vector<int> log2_;

    int min_pos(int a, int b) const {
        return depth_[static_cast<size_t>(a)] <= depth_[static_cast<size_t>(b)] ? a : b;
    }
};

}  // namespace paspt
