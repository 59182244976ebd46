#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace paspt {

using Weight = double;
inline constexpr Weight kUnreachable = std::numeric_limits<Weight>::infinity();

inline bool is_reachable(Weight d) { return d != kUnreachable; }

struct Edge {
    int u = -1;
    int v = -1;
    Weight w = 0;

    int other(int x) const { return x == u ? v : u; }
};

// Undirected graph with strictly positive edge weights. Each edge is stored
// once; adjacency lists carry (neighbor, edge id) pairs. Immutable after
// construction.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }

    struct Neighbor {
        int to;
        int edge;
    };
    std::span<const Neighbor> neighbors(int v) const {
        return {adj_.data() + adj_off_[static_cast<size_t>(v)],
                adj_.data() + adj_off_[static_cast<size_t>(v) + 1]};
    }

    // Edge id for the unordered pair (u, v), or -1.
    int find_edge(int u, int v) const;

    // Ids of all edges incident to v.
    std::vector<int> incident_edges(int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Neighbor> adj_;
    std::vector<int> adj_off_;
    std::unordered_map<std::uint64_t, int> edge_index_;
};

}  // namespace paspt
