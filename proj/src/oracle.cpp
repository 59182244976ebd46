#include "paspt/oracle.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "paspt/io.hpp"

namespace paspt {

namespace {

struct Dispatch {
    bool below_cut = false;  // target hangs below the failure span
    int h_idx = 0;           // aux-node index of its component root
    int span = 0;
    int comp_root = -1;
};

// Classifies the target against the failure: either its tree path survives
// (answer is the tree distance) or it lives under one of the failed span's
// components, identified through a single LCA probe.
Dispatch classify(const ShortestPathTree& t, const LcaIndex& lca, int f,
                  const PathFailure& fail, int target, QueryStats* stats) {
    const int v = fail.deepest;
    if (fail.len < 1 || fail.len > f) throw std::invalid_argument("query: bad failure length");
    if (v < 0 || v >= static_cast<int>(t.parent.size()) || !t.is_reached(v) ||
        fail.len > t.level[v])
        throw std::invalid_argument("query: failure does not fit the tree");
    Dispatch d;
    d.span = std::min(f, t.level[v]);
    if (target < 0 || target >= static_cast<int>(t.parent.size()) || !t.is_reached(target))
        return d;  // outside the tree: unreachable everywhere
    const int u = lca.lca(v, target);
    if (stats) stats->lookups += 2;  // lca probe + level read
    if (t.level[u] <= t.level[v] - fail.len) return d;
    d.below_cut = true;
    d.comp_root = u;
    d.h_idx = t.level[u] - t.level[v] + d.span;
    return d;
}

}  // namespace

OracleConst::OracleConst(const WeightedGraph& g, const ShortestPathTree& t, int f)
    : f_(f), tree_(t), lca_(t) {
    if (f < 1) throw std::invalid_argument("oracle: f must be >= 1");
    per_vertex_.resize(tree_.parent.size());
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!tree_.is_reached(v) || tree_.level[v] == 0) continue;
        per_vertex_[v].aux = build_aux_graph(g, t, v, f);
    }
    build_tables();
}

void OracleConst::build_tables() {
    for (auto& vt : per_vertex_) {
        const AuxGraph& aux = vt.aux;
        const int q = aux.num_nodes();
        if (q == 0) continue;
        vt.dist.assign(q * q, kUnreachable);
        vt.next.assign(q * q, -1);
        for (int i = 0; i < q; ++i) vt.dist[i * q + i] = 0;
        for (size_t e = 0; e < aux.edges.size(); ++e) {
            const auto& ae = aux.edges[e];
            if (ae.w < vt.dist[ae.a * q + ae.b]) {
                vt.dist[ae.a * q + ae.b] = vt.dist[ae.b * q + ae.a] = ae.w;
                vt.next[ae.a * q + ae.b] = vt.next[ae.b * q + ae.a] = static_cast<int>(e);
            }
        }
        for (int m = 0; m < q; ++m)
            for (int i = 0; i < q; ++i) {
                if (!is_reachable(vt.dist[i * q + m])) continue;
                for (int j = 0; j < q; ++j) {
                    const Weight via = vt.dist[i * q + m] + vt.dist[m * q + j];
                    if (via < vt.dist[i * q + j]) {
                        vt.dist[i * q + j] = via;
                        vt.next[i * q + j] = vt.next[i * q + m];
                    }
                }
            }

        // Best re-entry root for every (failure length, surviving component
        // root): minimizes tree distance to the root plus reconnection-graph
        // distance to the component.
        const int span = aux.span_len;
        vt.selection.assign(span * (span + 1) / 2, -1);
        for (int eta = 1; eta <= span; ++eta) {
            const int base = eta * (eta - 1) / 2;
            for (int h = span - eta + 1; h <= span; ++h) {
                int best = -1;
                Weight best_val = kUnreachable;
                for (int idx = 0; idx <= span - eta; ++idx) {
                    if (!is_reachable(vt.dist[idx * q + h])) continue;
                    const Weight val = tree_.dist[aux.roots[idx]] + vt.dist[idx * q + h];
                    if (val < best_val) {
                        best_val = val;
                        best = idx;
                    }
                }
                vt.selection[base + (h - (span - eta + 1))] = best;
            }
        }
    }
}

bool OracleConst::dispatch(const PathFailure& fail, int target, int& h_idx,
                           Weight& early, QueryStats* stats) const {
    Dispatch d = classify(tree_, lca_, f_, fail, target, stats);
    if (!d.below_cut) {
        early = (target >= 0 && target < static_cast<int>(tree_.parent.size()) &&
                 tree_.is_reached(target))
                    ? tree_.dist[target]
                    : kUnreachable;
        if (stats) ++stats->lookups;
        return false;
    }
    h_idx = d.h_idx;
    return true;
}

Weight OracleConst::query_distance(const PathFailure& fail, int target,
                                   QueryStats* stats) const {
    int h_idx;
    Weight early;
    if (!dispatch(fail, target, h_idx, early, stats)) return early;
    const VertexTables& vt = per_vertex_[fail.deepest];
    const int span = vt.aux.span_len;
    const int q = vt.aux.num_nodes();
    const int sel = vt.selection[fail.len * (fail.len - 1) / 2 + (h_idx - (span - fail.len + 1))];
    if (stats) ++stats->lookups;
    if (sel < 0) return kUnreachable;
    const int comp_root = vt.aux.roots[h_idx];
    if (stats) stats->lookups += 4;  // two tree distances, aux distance, root id
    return tree_.dist[vt.aux.roots[sel]] + vt.dist[sel * q + h_idx] +
           (tree_.dist[target] - tree_.dist[comp_root]);
}

std::vector<int> OracleConst::expand_aux_path(const VertexTables& vt, int from_idx,
                                              int to_idx) const {
    const int q = vt.aux.num_nodes();
    std::vector<int> verts{vt.aux.roots[from_idx]};
    int cur = from_idx;
    while (cur != to_idx) {
        const int e = vt.next[cur * q + to_idx];
        const auto& ae = vt.aux.edges[e];
        const bool forward = (cur == ae.a);
        const int nxt = forward ? ae.b : ae.a;
        const int near_wit = forward ? ae.wu : ae.wv;
        const int far_wit = forward ? ae.wv : ae.wu;
        // descend inside the current component to the witness edge
        std::vector<int> down = tree_.path_from(vt.aux.roots[cur], near_wit);
        verts.insert(verts.end(), down.begin() + 1, down.end());
        // cross, then climb to the next component's root
        std::vector<int> up = tree_.path_from(vt.aux.roots[nxt], far_wit);
        verts.insert(verts.end(), up.rbegin(), up.rend());
        cur = nxt;
    }
    return verts;
}

QueryAnswer OracleConst::query_path(const PathFailure& fail, int target) const {
    QueryAnswer ans;
    int h_idx;
    Weight early;
    if (!dispatch(fail, target, h_idx, early, nullptr)) {
        ans.distance = early;
        if (ans.reachable()) ans.path = tree_.path_from(tree_.root, target);
        return ans;
    }
    const VertexTables& vt = per_vertex_[fail.deepest];
    const int span = vt.aux.span_len;
    const int q = vt.aux.num_nodes();
    const int sel = vt.selection[fail.len * (fail.len - 1) / 2 + (h_idx - (span - fail.len + 1))];
    if (sel < 0) return ans;
    const int comp_root = vt.aux.roots[h_idx];
    ans.distance = tree_.dist[vt.aux.roots[sel]] + vt.dist[sel * q + h_idx] +
                   (tree_.dist[target] - tree_.dist[comp_root]);
    ans.path = tree_.path_from(tree_.root, vt.aux.roots[sel]);
    std::vector<int> mid = expand_aux_path(vt, sel, h_idx);
    ans.path.insert(ans.path.end(), mid.begin() + 1, mid.end());
    std::vector<int> tail = tree_.path_from(comp_root, target);
    ans.path.insert(ans.path.end(), tail.begin() + 1, tail.end());
    return ans;
}

OracleCompact::OracleCompact(const WeightedGraph& g, const ShortestPathTree& t,
                             int f, int k, std::uint64_t seed)
    : f_(f), k_(k), seed_(seed), tree_(t), lca_(t) {
    if (f < 1 || k < 1) throw std::invalid_argument("oracle: f and k must be >= 1");
    std::vector<AuxGraph> aux(tree_.parent.size());
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!tree_.is_reached(v) || tree_.level[v] == 0) continue;
        aux[v] = build_aux_graph(g, t, v, f);
    }
    build_tables(std::move(aux));
}

void OracleCompact::build_tables(std::vector<AuxGraph> aux) {
    per_vertex_.resize(aux.size());
    for (size_t v = 0; v < aux.size(); ++v) {
        VertexTables& vt = per_vertex_[v];
        vt.aux = std::move(aux[v]);
        const int q = vt.aux.num_nodes();
        if (q == 0) continue;
        std::vector<Edge> uedges;
        vt.edge_at.assign(q * q, -1);
        for (size_t e = 0; e < vt.aux.edges.size(); ++e) {
            const auto& ae = vt.aux.edges[e];
            uedges.push_back({ae.a, ae.b, ae.w});
            vt.edge_at[ae.a * q + ae.b] = vt.edge_at[ae.b * q + ae.a] = static_cast<int>(e);
        }
        vt.oracle = SmallDistanceOracle(WeightedGraph(q, std::move(uedges)), k_,
                                        seed_ + static_cast<std::uint64_t>(v));
    }
}

QueryAnswer OracleCompact::query(const PathFailure& fail, int target, bool want_path,
                                 QueryStats* stats) const {
    QueryAnswer ans;
    Dispatch d = classify(tree_, lca_, f_, fail, target, stats);
    if (!d.below_cut) {
        if (target >= 0 && target < static_cast<int>(tree_.parent.size()) &&
            tree_.is_reached(target)) {
            ans.distance = tree_.dist[target];
            if (want_path) ans.path = tree_.path_from(tree_.root, target);
        }
        return ans;
    }
    const VertexTables& vt = per_vertex_[fail.deepest];
    const int span = vt.aux.span_len;

    // The re-entry root is scanned over the admissible aux nodes: the tree
    // root plus the on-path roots at or above the failure cut.
    int best = -1;
    Weight best_val = kUnreachable;
    SmallDistanceOracle::Stats ostats;
    for (int idx = 0; idx <= span - fail.len; ++idx) {
        const Weight du = vt.oracle.distance(idx, d.h_idx, &ostats);
        if (!is_reachable(du)) continue;
        const Weight val = tree_.dist[vt.aux.roots[idx]] + du;
        if (val < best_val) {
            best_val = val;
            best = idx;
        }
    }
    if (stats) stats->lookups += ostats.lookups + (span - fail.len + 1);
    if (best < 0) return ans;
    ans.distance = best_val + (tree_.dist[target] - tree_.dist[d.comp_root]);
    if (!want_path) return ans;

    ans.path = tree_.path_from(tree_.root, vt.aux.roots[best]);
    std::vector<int> nodes = vt.oracle.path(best, d.h_idx);
    if (nodes.empty()) nodes = {best};
    const int q = vt.aux.num_nodes();
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
        const auto& ae = vt.aux.edges[vt.edge_at[nodes[i] * q + nodes[i + 1]]];
        const bool forward = (nodes[i] == ae.a);
        std::vector<int> down = tree_.path_from(vt.aux.roots[nodes[i]], forward ? ae.wu : ae.wv);
        ans.path.insert(ans.path.end(), down.begin() + 1, down.end());
        std::vector<int> up = tree_.path_from(vt.aux.roots[nodes[i + 1]], forward ? ae.wv : ae.wu);
        ans.path.insert(ans.path.end(), up.rbegin(), up.rend());
    }
    std::vector<int> tail = tree_.path_from(d.comp_root, target);
    ans.path.insert(ans.path.end(), tail.begin() + 1, tail.end());
    return ans;
}

// --- serialization ---------------------------------------------------------

void write_tree_block(std::ostream& out, const ShortestPathTree& t) {
    out << "tree " << t.reached << "\n";
    std::vector<int> order;
    for (int v = 0; v < static_cast<int>(t.parent.size()); ++v)
        if (t.is_reached(v) && v != t.root) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return t.tin[a] < t.tin[b]; });
    for (int v : order)
        out << v << " " << t.parent[v] << " "
            << format_weight(t.dist[v] - t.dist[t.parent[v]]) << "\n";
}

ShortestPathTree read_tree_block(std::istream& in, int n, int root) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("oracle: missing tree block");
    std::istringstream hs(line);
    std::string tag;
    int reached;
    if (!(hs >> tag >> reached) || tag != "tree")
        throw std::runtime_error("oracle: bad tree block header");
    ShortestPathTree t;
    t.root = root;
    t.parent.assign(n, -1);
    t.parent_edge.assign(n, -1);
    t.dist.assign(n, kUnreachable);
    t.dist[root] = 0;
    for (int i = 0; i < reached - 1; ++i) {
        int v, p;
        Weight w;
        if (!(in >> v >> p >> w)) throw std::runtime_error("oracle: bad tree line");
        t.parent[v] = p;
        t.dist[v] = t.dist[p] + w;  // parents precede children in the block
    }
    std::getline(in, line);  // consume trailing newline
    finalize_tree(t);
    return t;
}

namespace {

void write_aux_blocks(std::ostream& out, const std::vector<AuxGraph>& aux) {
    for (size_t v = 0; v < aux.size(); ++v) {
        if (aux[v].num_nodes() == 0) continue;
        out << "vertex " << v << " " << aux[v].span_len << " " << aux[v].edges.size() << "\n";
        for (const auto& ae : aux[v].edges)
            out << ae.a << " " << ae.b << " " << format_weight(ae.w) << " " << ae.wu
                << " " << ae.wv << "\n";
    }
    out << "end\n";
}

std::vector<AuxGraph> read_aux_blocks(std::istream& in, const ShortestPathTree& t) {
    std::vector<AuxGraph> aux(t.parent.size());
    std::string tag;
    while (in >> tag) {
        if (tag == "end") break;
        if (tag != "vertex") throw std::runtime_error("oracle: bad vertex block");
        int v, span;
        size_t ecount;
        if (!(in >> v >> span >> ecount)) throw std::runtime_error("oracle: bad vertex header");
        AuxGraph& a = aux[v];
        a.owner = v;
        a.span_len = span;
        std::vector<int> on_path = t.path_from(t.root, v);
        a.roots.push_back(t.root);
        for (int i = t.level[v] - span + 1; i <= t.level[v]; ++i) a.roots.push_back(on_path[i]);
        for (size_t e = 0; e < ecount; ++e) {
            AuxGraph::AuxEdge ae;
            ae.witness = -1;
            if (!(in >> ae.a >> ae.b >> ae.w >> ae.wu >> ae.wv))
                throw std::runtime_error("oracle: bad aux edge");
            a.edges.push_back(ae);
        }
    }
    return aux;
}

}  // namespace

void OracleConst::save(std::ostream& out) const {
    out << "paspt-oracle v1 const " << tree_.parent.size() << " " << tree_.root << " "
        << f_ << "\n";
    write_tree_block(out, tree_);
    std::vector<AuxGraph> aux(per_vertex_.size());
    for (size_t v = 0; v < per_vertex_.size(); ++v) aux[v] = per_vertex_[v].aux;
    write_aux_blocks(out, aux);
}

OracleConst OracleConst::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("oracle: empty stream");
    std::istringstream hs(line);
    std::string magic, version, kind;
    int n, root, f;
    if (!(hs >> magic >> version >> kind >> n >> root >> f) || magic != "paspt-oracle" ||
        version != "v1" || kind != "const")
        throw std::runtime_error("oracle: bad header: " + line);
    OracleConst o;
    o.f_ = f;
    o.tree_ = read_tree_block(in, n, root);
    o.lca_ = LcaIndex(o.tree_);
    std::vector<AuxGraph> aux = read_aux_blocks(in, o.tree_);
    o.per_vertex_.resize(aux.size());
    for (size_t v = 0; v < aux.size(); ++v) o.per_vertex_[v].aux = std::move(aux[v]);
    o.build_tables();
    return o;
}

void OracleCompact::save(std::ostream& out) const {
    out << "paspt-oracle v1 compact " << tree_.parent.size() << " " << tree_.root << " "
        << f_ << " " << k_ << " " << seed_ << "\n";
    write_tree_block(out, tree_);
    std::vector<AuxGraph> aux(per_vertex_.size());
    for (size_t v = 0; v < per_vertex_.size(); ++v) aux[v] = per_vertex_[v].aux;
    write_aux_blocks(out, aux);
}

OracleCompact OracleCompact::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("oracle: empty stream");
    std::istringstream hs(line);
    std::string magic, version, kind;
    int n, root, f, k;
    std::uint64_t seed;
    if (!(hs >> magic >> version >> kind >> n >> root >> f >> k >> seed) ||
        magic != "paspt-oracle" || version != "v1" || kind != "compact")
        throw std::runtime_error("oracle: bad header: " + line);
    OracleCompact o;
    o.f_ = f;
    o.k_ = k;
    o.seed_ = seed;
    o.tree_ = read_tree_block(in, n, root);
    o.lca_ = LcaIndex(o.tree_);
    o.build_tables(read_aux_blocks(in, o.tree_));
    return o;
}

}  // namespace paspt
