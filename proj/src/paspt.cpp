#include "paspt/paspt.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "paspt/io.hpp"
#include "paspt/spanner.hpp"

namespace paspt {

PathFailure PathFailure::make(const ShortestPathTree& t, int deepest, int len) {
    if (deepest < 0 || static_cast<size_t>(deepest) >= t.parent.size() || !t.is_reached(deepest))
        throw std::invalid_argument("failure: vertex not in tree");
    PathFailure f;
    f.deepest = deepest;
    f.len = len;
    f.edges = t.tail_edges(deepest, len);
    return f;
}

AuxGraph build_aux_graph(const WeightedGraph& g, const ShortestPathTree& t,
                         int v, int f) {
    AuxGraph aux;
    aux.owner = v;
    if (!t.is_reached(v)) return aux;
    const int lv = t.level[static_cast<size_t>(v)];
    aux.span_len = std::min(f, lv);
    if (aux.span_len == 0) return aux;

    // Component roots of the tree minus the failure span: the tree root's
    // component, then one component per on-path vertex below the cut.
    std::vector<int> on_path = t.path_from(t.root, v);  // z_0 .. z_lv
    aux.roots.push_back(t.root);
    for (int i = lv - aux.span_len + 1; i <= lv; ++i)
        aux.roots.push_back(on_path[static_cast<size_t>(i)]);
    const int q = aux.num_nodes();

    std::vector<char> failed(static_cast<size_t>(g.num_edges()), 0);
    for (int i = lv - aux.span_len + 1; i <= lv; ++i)
        failed[static_cast<size_t>(t.parent_edge[static_cast<size_t>(on_path[static_cast<size_t>(i)])])] = 1;

    // Component of a vertex: the deepest on-path root whose subtree holds
    // it, found by binary search over the nested Euler intervals; index 0
    // when none does.
    auto component = [&](int x) {
        int lo = 1, hi = q - 1, best = 0;
        while (lo <= hi) {
            const int mid = (lo + hi) / 2;
            if (t.is_ancestor(aux.roots[static_cast<size_t>(mid)], x)) {
                best = mid;
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
        return best;
    };

    // One pass over the edges keeps, per component pair, the cheapest
    // reconnection; ties fall to the smallest witness id by scan order.
    std::vector<AuxGraph::AuxEdge> best(static_cast<size_t>(q) * static_cast<size_t>(q));
    for (auto& e : best) e.witness = -1;
    for (int id = 0; id < g.num_edges(); ++id) {
        if (failed[static_cast<size_t>(id)]) continue;
        const Edge& e = g.edge(id);
        if (!t.is_reached(e.u) || !t.is_reached(e.v)) continue;
        int cu = component(e.u);
        int cv = component(e.v);
        if (cu == cv) continue;
        int x = e.u, y = e.v;
        if (cu > cv) {
            std::swap(cu, cv);
            std::swap(x, y);
        }
        const Weight val = t.descend_dist(aux.roots[static_cast<size_t>(cu)], x) + e.w +
                           t.descend_dist(aux.roots[static_cast<size_t>(cv)], y);
        AuxGraph::AuxEdge& slot = best[static_cast<size_t>(cu) * static_cast<size_t>(q) + static_cast<size_t>(cv)];
        if (slot.witness < 0 || val < slot.w) slot = {cu, cv, val, id, x, y};
    }
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b) {
            const auto& slot = best[static_cast<size_t>(a) * static_cast<size_t>(q) + static_cast<size_t>(b)];
            if (slot.witness >= 0) aux.edges.push_back(slot);
        }
    return aux;
}

std::vector<int> FtStructure::all_edges(const ShortestPathTree& t) const {
    std::vector<int> ids = extra;
    for (size_t v = 0; v < t.parent_edge.size(); ++v)
        if (t.parent_edge[v] >= 0) ids.push_back(t.parent_edge[v]);
    std::sort(ids.begin(), ids.end());
    return ids;
}

FtStructure build_paspt(const WeightedGraph& g, const ShortestPathTree& t,
                        int f, int k) {
    if (f < 1 || k < 1) throw std::invalid_argument("build_paspt: f and k must be >= 1");
    FtStructure h;
    h.variant = Variant::general;
    h.f = f;
    h.k = k;

    std::vector<char> in_extra(static_cast<size_t>(g.num_edges()), 0);
    std::vector<char> in_tree(static_cast<size_t>(g.num_edges()), 0);
    for (int pe : t.parent_edge)
        if (pe >= 0) in_tree[static_cast<size_t>(pe)] = 1;

    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!t.is_reached(v) || t.level[static_cast<size_t>(v)] == 0) continue;
        AuxGraph aux = build_aux_graph(g, t, v, f);
        if (aux.edges.empty()) continue;
        if (k == 1) {
            for (const auto& ae : aux.edges) in_extra[static_cast<size_t>(ae.witness)] = 1;
        } else {
            // Sparsify the reconnection graph before materializing it.
            std::vector<Edge> uedges;
            uedges.reserve(aux.edges.size());
            for (const auto& ae : aux.edges) uedges.push_back({ae.a, ae.b, ae.w});
            WeightedGraph u(aux.num_nodes(), std::move(uedges));
            Spanner sp = build_spanner(u, k);
            for (int idx : sp.edge_ids) in_extra[static_cast<size_t>(aux.edges[static_cast<size_t>(idx)].witness)] = 1;
        }
    }
    for (int id = 0; id < g.num_edges(); ++id)
        if (in_extra[static_cast<size_t>(id)] && !in_tree[static_cast<size_t>(id)]) h.extra.push_back(id);
    return h;
}

std::vector<Weight> structure_distance(const WeightedGraph& g,
                                       const ShortestPathTree& t,
                                       const FtStructure& h,
                                       const PathFailure& fail) {
    if (fail.len > h.f) throw std::invalid_argument("failure longer than structure parameter f");
    std::vector<char> removed(static_cast<size_t>(g.num_edges()), 0);
    for (int id : fail.edges) removed[static_cast<size_t>(id)] = 1;
    return dijkstra_subset(g, t.root, h.all_edges(t), removed);
}

void write_structure(std::ostream& out, const WeightedGraph& g, const FtStructure& h) {
    out << "paspt v1 " << g.num_vertices() << " " << h.f << " " << h.k << " "
        << (h.variant == Variant::general ? "general" : "two_path") << "\n";
    for (int id : h.extra) {
        const Edge& e = g.edge(id);
        out << e.u << " " << e.v << " " << format_weight(e.w) << "\n";
    }
}

FtStructure read_structure(std::istream& in, const WeightedGraph& g) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("structure: empty stream");
    std::istringstream hs(line);
    std::string magic, version, variant;
    int n, f, k;
    if (!(hs >> magic >> version >> n >> f >> k >> variant) || magic != "paspt" || version != "v1")
        throw std::runtime_error("structure: bad header: " + line);
    if (n != g.num_vertices()) throw std::runtime_error("structure: vertex count mismatch");
    FtStructure h;
    h.f = f;
    h.k = k;
    if (variant == "general") {
        h.variant = Variant::general;
    } else if (variant == "two_path") {
        h.variant = Variant::two_path;
    } else {
        throw std::runtime_error("structure: unknown variant " + variant);
    }
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        int u, v;
        Weight w;
        if (!(ls >> u >> v >> w)) {
            if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
            throw std::runtime_error("structure: bad edge line: " + line);
        }
        const int id = g.find_edge(u, v);
        if (id < 0 || g.edge(id).w != w)
            throw std::runtime_error("structure: edge not present in graph: " + line);
        h.extra.push_back(id);
    }
    std::sort(h.extra.begin(), h.extra.end());
    return h;
}

}  // namespace paspt
