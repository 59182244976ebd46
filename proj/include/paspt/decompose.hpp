#pragma once

#include <vector>

#include "paspt/spt.hpp"

namespace paspt {

// Top-down tree path: consecutive vertices are parent/child, the first
// vertex is an ancestor of the last.
struct TreePath {
    std::vector<int> vertices;
    int depth = 0;  // recursion level that produced this path
};

// Recursive splitting of a tree into ancestor-leaf paths. Each path follows
// largest-subtree children from its component root down to a leaf, so every
// subtree detached by its removal has fewer than half the component's
// vertices. Paths other than the first start at their attachment vertex on
// the parent path; the paths are edge-disjoint and jointly cover all tree
// edges.
struct PathDecomposition {
    std::vector<TreePath> paths;
    int max_depth = 0;
};

PathDecomposition decompose(const ShortestPathTree& t);

}  // namespace paspt
