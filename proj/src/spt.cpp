#include "paspt/spt.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace paspt {

std::vector<int> ShortestPathTree::path_from(int a, int v) const {
    std::vector<int> verts;
    int cur = v;
    while (cur != a) {
        verts.push_back(cur);
        cur = parent[static_cast<size_t>(cur)];
        if (cur < 0) throw std::logic_error("path_from: not an ancestor");
    }
    verts.push_back(a);
    std::reverse(verts.begin(), verts.end());
    return verts;
}

std::vector<int> ShortestPathTree::tail_edges(int v, int len) const {
    if (len < 1 || len > level[static_cast<size_t>(v)])
        throw std::invalid_argument("failure length exceeds vertex level");
    std::vector<int> ids;
    int cur = v;
    for (int i = 0; i < len; ++i) {
        ids.push_back(parent_edge[static_cast<size_t>(cur)]);
        cur = parent[static_cast<size_t>(cur)];
    }
    std::reverse(ids.begin(), ids.end());
    return ids;
}

std::vector<int> ShortestPathTree::subtree_sizes() const {
    const int n = static_cast<int>(parent.size());
    std::vector<int> size(static_cast<size_t>(n), 0);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        if (is_reached(v)) order.push_back(v);
    // Children have larger tin than their parent, so reverse tin order is a
    // valid bottom-up sweep.
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return tin[static_cast<size_t>(a)] > tin[static_cast<size_t>(b)]; });
    for (int v : order) {
        ++size[static_cast<size_t>(v)];
        if (parent[static_cast<size_t>(v)] >= 0) size[static_cast<size_t>(parent[static_cast<size_t>(v)])] += size[static_cast<size_t>(v)];
    }
    return size;
}

namespace {

struct HeapEntry {
    Weight d;
    int v;
    bool operator>(const HeapEntry& o) const {
        if (d != o.d) return d > o.d;
        return v > o.v;
    }
};

}  // namespace

// Fills children lists, levels, Euler intervals and the reached count from
// root/parent/dist.
void finalize_tree(ShortestPathTree& t) {
    const int n = static_cast<int>(t.parent.size());
    t.children.assign(static_cast<size_t>(n), {});
    for (int v = 0; v < n; ++v)
        if (t.parent[static_cast<size_t>(v)] >= 0) t.children[static_cast<size_t>(t.parent[static_cast<size_t>(v)])].push_back(v);
    for (auto& c : t.children) std::sort(c.begin(), c.end());
    t.tin.assign(static_cast<size_t>(n), -1);
    t.tout.assign(static_cast<size_t>(n), -1);
    t.level.assign(static_cast<size_t>(n), -1);
    t.reached = 0;
    if (t.root < 0 || !is_reachable(t.dist[static_cast<size_t>(t.root)])) return;
    int timer = 0;
    std::vector<std::pair<int, size_t>> stack{{t.root, 0}};
    t.tin[static_cast<size_t>(t.root)] = timer++;
    t.level[static_cast<size_t>(t.root)] = 0;
    t.reached = 1;
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx < t.children[static_cast<size_t>(v)].size()) {
            int c = t.children[static_cast<size_t>(v)][idx++];
            t.tin[static_cast<size_t>(c)] = timer++;
            t.level[static_cast<size_t>(c)] = t.level[static_cast<size_t>(v)] + 1;
            ++t.reached;
            stack.emplace_back(c, 0);
        } else {
            t.tout[static_cast<size_t>(v)] = timer++;
            stack.pop_back();
        }
    }
}

ShortestPathTree restricted_spt(const WeightedGraph& g, int root,
                                std::span<const int> removed,
                                const ShortestPathTree* prefer_tree) {
    const int n = g.num_vertices();
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");

    std::vector<char> dropped(static_cast<size_t>(g.num_edges()), 0);
    for (int id : removed) dropped[static_cast<size_t>(id)] = 1;

    ShortestPathTree t;
    t.root = root;
    t.parent.assign(static_cast<size_t>(n), -1);
    t.parent_edge.assign(static_cast<size_t>(n), -1);
    t.dist.assign(static_cast<size_t>(n), kUnreachable);
    t.level.assign(static_cast<size_t>(n), -1);

    auto on_ref_tree = [&](int v, int eid) {
        return prefer_tree && prefer_tree->parent_edge[static_cast<size_t>(v)] == eid;
    };

    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;
    t.dist[static_cast<size_t>(root)] = 0;
    heap.push({0, root});
    std::vector<char> done(static_cast<size_t>(n), 0);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (done[static_cast<size_t>(u)]) continue;
        done[static_cast<size_t>(u)] = 1;
        for (const auto& nb : g.neighbors(u)) {
            if (dropped[static_cast<size_t>(nb.edge)]) continue;
            const Weight nd = d + g.edge(nb.edge).w;
            const int v = nb.to;
            if (nd < t.dist[static_cast<size_t>(v)]) {
                t.dist[static_cast<size_t>(v)] = nd;
                t.parent[static_cast<size_t>(v)] = u;
                t.parent_edge[static_cast<size_t>(v)] = nb.edge;
                heap.push({nd, v});
            } else if (nd == t.dist[static_cast<size_t>(v)] && t.parent[static_cast<size_t>(v)] != -1) {
                // Equal-distance tie: prefer the fixed tree's edge, then the
                // smallest parent id.
                const bool cand_tree = on_ref_tree(v, nb.edge);
                const bool cur_tree = on_ref_tree(v, t.parent_edge[static_cast<size_t>(v)]);
                if (cand_tree != cur_tree ? cand_tree : (!cur_tree && u < t.parent[static_cast<size_t>(v)])) {
                    t.parent[static_cast<size_t>(v)] = u;
                    t.parent_edge[static_cast<size_t>(v)] = nb.edge;
                }
            }
        }
    }
    finalize_tree(t);
    return t;
}

ShortestPathTree build_spt(const WeightedGraph& g, int root) {
    return restricted_spt(g, root, {}, nullptr);
}

ShortestPathTree vertex_removed_spt(const WeightedGraph& g, int root, int x,
                                    const ShortestPathTree* prefer_tree) {
    std::vector<int> removed = g.incident_edges(x);
    return restricted_spt(g, root, removed, prefer_tree);
}

std::vector<Weight> dijkstra_subset(const WeightedGraph& g, int root,
                                    std::span<const int> edge_ids,
                                    const std::vector<char>& removed) {
    const int n = g.num_vertices();
    std::vector<std::vector<WeightedGraph::Neighbor>> adj(static_cast<size_t>(n));
    for (int id : edge_ids) {
        if (!removed.empty() && removed[static_cast<size_t>(id)]) continue;
        const Edge& e = g.edge(id);
        adj[static_cast<size_t>(e.u)].push_back({e.v, id});
        adj[static_cast<size_t>(e.v)].push_back({e.u, id});
    }
    std::vector<Weight> dist(static_cast<size_t>(n), kUnreachable);
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;
    dist[static_cast<size_t>(root)] = 0;
    heap.push({0, root});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[static_cast<size_t>(u)]) continue;
        for (const auto& nb : adj[static_cast<size_t>(u)]) {
            const Weight nd = d + g.edge(nb.edge).w;
            if (nd < dist[static_cast<size_t>(nb.to)]) {
                dist[static_cast<size_t>(nb.to)] = nd;
                heap.push({nd, nb.to});
            }
        }
    }
    return dist;
}

}  // namespace paspt
