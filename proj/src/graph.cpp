#include "paspt/graph.hpp"

#include <stdexcept>

namespace paspt {

namespace {
std::uint64_t pair_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}
}  // namespace

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    edge_index_.reserve(edges_.size());
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (size_t id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop");
        if (!(e.w > 0)) throw std::invalid_argument("edge weight must be positive");
        if (!edge_index_.emplace(pair_key(e.u, e.v), static_cast<int>(id)).second)
            throw std::invalid_argument("duplicate edge");
        ++deg[static_cast<size_t>(e.u)];
        ++deg[static_cast<size_t>(e.v)];
    }
    adj_off_.assign(static_cast<size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) adj_off_[static_cast<size_t>(v) + 1] = adj_off_[static_cast<size_t>(v)] + deg[static_cast<size_t>(v)];
    adj_.resize(static_cast<size_t>(adj_off_[static_cast<size_t>(n)]));
    std::vector<int> pos(adj_off_.begin(), adj_off_.end() - 1);
    for (size_t id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        adj_[static_cast<size_t>(pos[static_cast<size_t>(e.u)]++)] = {e.v, static_cast<int>(id)};
        adj_[static_cast<size_t>(pos[static_cast<size_t>(e.v)]++)] = {e.u, static_cast<int>(id)};
    }
}

int WeightedGraph::find_edge(int u, int v) const {
    auto it = edge_index_.find(pair_key(u, v));
    return it == edge_index_.end() ? -1 : it->second;
}

std::vector<int> WeightedGraph::incident_edges(int v) const {
    std::vector<int> out;
    for (const Neighbor& nb : neighbors(v)) out.push_back(nb.edge);
    return out;
}

}  // namespace paspt
