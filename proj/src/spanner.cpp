#include "paspt/spanner.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "paspt/rng.hpp"

namespace paspt {

namespace {

// Dijkstra with an early cutoff: distances above `bound` are irrelevant.
Weight bounded_distance(const std::vector<std::vector<std::pair<int, Weight>>>& adj,
                        int s, int t, Weight bound) {
    if (s == t) return 0;
    const int n = static_cast<int>(adj.size());
    std::vector<Weight> dist(static_cast<size_t>(n), kUnreachable);
    using Entry = std::pair<Weight, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[static_cast<size_t>(s)] = 0;
    heap.push({0, s});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[static_cast<size_t>(u)]) continue;
        if (u == t) return d;
        if (d > bound) break;
        for (auto [v, w] : adj[static_cast<size_t>(u)]) {
            const Weight nd = d + w;
            if (nd < dist[static_cast<size_t>(v)]) {
                dist[static_cast<size_t>(v)] = nd;
                heap.push({nd, v});
            }
        }
    }
    return dist[static_cast<size_t>(t)];
}

}  // namespace

Spanner build_spanner(const WeightedGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("spanner: k must be >= 1");
    Spanner s;
    s.k = k;
    if (k == 1) {
        s.edge_ids.resize(static_cast<size_t>(g.num_edges()));
        for (int i = 0; i < g.num_edges(); ++i) s.edge_ids[static_cast<size_t>(i)] = i;
        return s;
    }
    std::vector<int> order(static_cast<size_t>(g.num_edges()));
    for (int i = 0; i < g.num_edges(); ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.edge(a).w != g.edge(b).w) return g.edge(a).w < g.edge(b).w;
        return a < b;
    });
    std::vector<std::vector<std::pair<int, Weight>>> adj(static_cast<size_t>(g.num_vertices()));
    const Weight factor = 2 * k - 1;
    for (int id : order) {
        const Edge& e = g.edge(id);
        if (bounded_distance(adj, e.u, e.v, factor * e.w) > factor * e.w) {
            s.edge_ids.push_back(id);
            adj[static_cast<size_t>(e.u)].emplace_back(e.v, e.w);
            adj[static_cast<size_t>(e.v)].emplace_back(e.u, e.w);
        }
    }
    std::sort(s.edge_ids.begin(), s.edge_ids.end());
    return s;
}

SmallDistanceOracle::SmallDistanceOracle(const WeightedGraph& g, int k, std::uint64_t seed)
    : k_(k), n_(g.num_vertices()) {
    if (k < 1) throw std::invalid_argument("oracle: k must be >= 1");
    const int n = n_;
    bunch_.assign(static_cast<size_t>(n), {});
    center_level_.assign(static_cast<size_t>(n), 0);
    if (n == 0) return;

    // Nested center samples: level 0 is everything, each level keeps a
    // vertex with probability n^(-1/k).
    std::vector<std::vector<int>> sample(static_cast<size_t>(k));
    sample[0].resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) sample[0][static_cast<size_t>(v)] = v;
    Rng rng(seed);
    const double p = std::pow(static_cast<double>(n), -1.0 / k);
    for (int i = 1; i < k; ++i) {
        for (int v : sample[static_cast<size_t>(i) - 1])
            if (rng.uniform01() < p) sample[static_cast<size_t>(i)].push_back(v);
    }
    for (int i = 1; i < k; ++i)
        for (int v : sample[static_cast<size_t>(i)]) center_level_[static_cast<size_t>(v)] = i;

    // witness_[i][v]: nearest level-i center, cascaded so that equal
    // distances reuse the next level's witness (keeps every vertex inside
    // the cluster of each of its witnesses).
    witness_.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(n), -1));
    witness_dist_.assign(static_cast<size_t>(k), std::vector<Weight>(static_cast<size_t>(n), kUnreachable));
    using Entry = std::pair<Weight, int>;
    for (int i = k - 1; i >= 0; --i) {
        auto& wd = witness_dist_[static_cast<size_t>(i)];
        auto& wit = witness_[static_cast<size_t>(i)];
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
        for (int c : sample[static_cast<size_t>(i)]) {
            wd[static_cast<size_t>(c)] = 0;
            wit[static_cast<size_t>(c)] = c;
            heap.push({0, c});
        }
        std::vector<char> done(static_cast<size_t>(n), 0);
        while (!heap.empty()) {
            auto [d, u] = heap.top();
            heap.pop();
            if (done[static_cast<size_t>(u)]) continue;
            done[static_cast<size_t>(u)] = 1;
            for (const auto& nb : g.neighbors(u)) {
                const Weight nd = d + g.edge(nb.edge).w;
                if (nd < wd[static_cast<size_t>(nb.to)] ||
                    (nd == wd[static_cast<size_t>(nb.to)] && wit[static_cast<size_t>(u)] < wit[static_cast<size_t>(nb.to)])) {
                    wd[static_cast<size_t>(nb.to)] = nd;
                    wit[static_cast<size_t>(nb.to)] = wit[static_cast<size_t>(u)];
                    heap.push({nd, nb.to});
                }
            }
        }
        if (i + 1 < k) {
            const auto& up = witness_dist_[static_cast<size_t>(i) + 1];
            for (int v = 0; v < n; ++v)
                if (wd[static_cast<size_t>(v)] == up[static_cast<size_t>(v)])
                    wit[static_cast<size_t>(v)] = witness_[static_cast<size_t>(i) + 1][static_cast<size_t>(v)];
        }
    }

    // Cluster of a center c at its top level i: vertices strictly closer to
    // c than to the level-(i+1) sample. Truncated Dijkstra per center;
    // predecessors stay inside the cluster, which makes the stored walks
    // reconstructible.
    for (int c = 0; c < n; ++c) {
        const int lvl = center_level_[static_cast<size_t>(c)];
        const std::vector<Weight>* cutoff =
            (lvl + 1 < k) ? &witness_dist_[static_cast<size_t>(lvl) + 1] : nullptr;
        auto in_cluster = [&](int v, Weight d) {
            return cutoff == nullptr || d < (*cutoff)[static_cast<size_t>(v)];
        };
        std::vector<Weight> dist(static_cast<size_t>(n), kUnreachable);
        std::vector<int> pred(static_cast<size_t>(n), -1);
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
        dist[static_cast<size_t>(c)] = 0;
        heap.push({0, c});
        while (!heap.empty()) {
            auto [d, u] = heap.top();
            heap.pop();
            if (d > dist[static_cast<size_t>(u)]) continue;
            for (const auto& nb : g.neighbors(u)) {
                const Weight nd = d + g.edge(nb.edge).w;
                if (nd < dist[static_cast<size_t>(nb.to)] && in_cluster(nb.to, nd)) {
                    dist[static_cast<size_t>(nb.to)] = nd;
                    pred[static_cast<size_t>(nb.to)] = u;
                    heap.push({nd, nb.to});
                }
            }
        }
        for (int v = 0; v < n; ++v)
            if (is_reachable(dist[static_cast<size_t>(v)]))
                bunch_[static_cast<size_t>(v)].emplace(c, BunchEntry{dist[static_cast<size_t>(v)], pred[static_cast<size_t>(v)]});
    }
}

bool SmallDistanceOracle::meet(int u, int v, int& w, int& su, int& sv, Stats* stats) const {
    int a = u, b = v;
    for (int i = 0; i < k_; ++i) {
        const int cand = witness_[static_cast<size_t>(i)][static_cast<size_t>(a)];
        if (stats) ++stats->lookups;
        if (cand >= 0) {
            auto it = bunch_[static_cast<size_t>(b)].find(cand);
            if (stats) ++stats->lookups;
            if (it != bunch_[static_cast<size_t>(b)].end()) {
                w = cand;
                su = a;
                sv = b;
                return true;
            }
        }
        std::swap(a, b);
    }
    return false;
}

Weight SmallDistanceOracle::distance(int u, int v, Stats* stats) const {
    if (u == v) return 0;
    int w, su, sv;
    if (!meet(u, v, w, su, sv, stats)) return kUnreachable;
    return bunch_[static_cast<size_t>(su)].at(w).dist + bunch_[static_cast<size_t>(sv)].at(w).dist;
}

std::vector<int> SmallDistanceOracle::walk_from_center(int w, int v) const {
    std::vector<int> verts;
    int cur = v;
    while (cur != w) {
        verts.push_back(cur);
        cur = bunch_[static_cast<size_t>(cur)].at(w).pred;
    }
    verts.push_back(w);
    std::reverse(verts.begin(), verts.end());
    return verts;
}

std::vector<int> SmallDistanceOracle::path(int u, int v) const {
    if (u == v) return {};
    int w, su, sv;
    if (!meet(u, v, w, su, sv, nullptr)) return {};
    std::vector<int> left = walk_from_center(w, su);   // w .. su
    std::vector<int> right = walk_from_center(w, sv);  // w .. sv
    std::reverse(left.begin(), left.end());            // su .. w
    left.insert(left.end(), right.begin() + 1, right.end());
    if (su != u) std::reverse(left.begin(), left.end());
    return left;
}

}  // namespace paspt
