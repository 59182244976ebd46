#pragma once

#include <optional>
#include <span>
#include <vector>

#include "paspt/graph.hpp"

namespace paspt {

// Shortest-path tree rooted at a fixed source. Unreachable vertices carry
// dist == kUnreachable, parent == -1 and level == -1. Euler entry/exit
// times give O(1) subtree membership tests.
//
// Parent choice is deterministic: among all optimal predecessors of v we
// keep the one that (a) reaches v over an edge of the reference tree, when
// one was supplied, then (b) has the smallest vertex id. Two runs on the
// same input therefore produce identical parent arrays.
struct ShortestPathTree {
    int root = -1;
    std::vector<int> parent;       // -1 for root / unreachable
    std::vector<int> parent_edge;  // edge id into parent, -1 as above
    std::vector<Weight> dist;
    std::vector<int> level;        // hop count from root, -1 unreachable
    std::vector<int> tin, tout;    // Euler intervals, [tin, tout)
    std::vector<std::vector<int>> children;
    int reached = 0;

    bool is_reached(int v) const { return level[static_cast<size_t>(v)] >= 0; }

    // True iff a is an ancestor of b (a == b counts).
    bool is_ancestor(int a, int b) const {
        return tin[static_cast<size_t>(a)] <= tin[static_cast<size_t>(b)] &&
               tout[static_cast<size_t>(b)] <= tout[static_cast<size_t>(a)];
    }

    // Tree distance from an ancestor to a descendant.
    Weight descend_dist(int anc, int desc) const {
        return dist[static_cast<size_t>(desc)] - dist[static_cast<size_t>(anc)];
    }

    // Vertices of the tree path from ancestor a down to v, inclusive.
    std::vector<int> path_from(int a, int v) const;

    // Edge ids of the last `len` tree edges on the root path ending at v,
    // ordered top-down.
    std::vector<int> tail_edges(int v, int len) const;

    std::vector<int> subtree_sizes() const;
};

// Exact SPT of g minus `removed` edges. `prefer_tree`, when given, biases
// equal-distance parent choices toward its edges (the fixed-tree tie rule).
ShortestPathTree restricted_spt(const WeightedGraph& g, int root,
                                std::span<const int> removed,
                                const ShortestPathTree* prefer_tree = nullptr);

ShortestPathTree build_spt(const WeightedGraph& g, int root);

// SPT of g with vertex x (and all its incident edges) removed, plus
// optionally `removed` edges; x itself is reported unreachable.
ShortestPathTree vertex_removed_spt(const WeightedGraph& g, int root, int x,
                                    const ShortestPathTree* prefer_tree = nullptr);

// Plain distance computation on an edge-subset of g, used wherever a
// structure rather than the whole graph is searched. `edge_ids` lists the
// usable edges; `removed` marks failed ones by id (indexed over g).
std::vector<Weight> dijkstra_subset(const WeightedGraph& g, int root,
                                    std::span<const int> edge_ids,
                                    const std::vector<char>& removed);

// Recomputes children, levels, Euler intervals and the reached count from
// root/parent/dist. Used after deserializing a tree.
void finalize_tree(ShortestPathTree& t);

}  // namespace paspt
