#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "paspt/lca.hpp"
#include "paspt/paspt.hpp"
#include "paspt/spanner.hpp"

namespace paspt {

struct QueryAnswer {
    Weight distance = kUnreachable;
    std::vector<int> path;  // vertex sequence from root to target, when asked

    bool reachable() const { return is_reachable(distance); }
};

struct QueryStats {
    int lookups = 0;
};

// Sensitivity oracle answering root-to-vertex queries after a failure of up
// to f consecutive root-path edges, with a constant number of table reads
// per distance query. Per vertex it keeps the reconnection graph, its
// all-pairs solution and, for every sub-failure length and surviving
// component, the best re-entry root. Immutable; concurrent reads are safe.
class OracleConst {
public:
    OracleConst() = default;
    OracleConst(const WeightedGraph& g, const ShortestPathTree& t, int f);

    Weight query_distance(const PathFailure& fail, int target,
                          QueryStats* stats = nullptr) const;
    QueryAnswer query_path(const PathFailure& fail, int target) const;

    int f() const { return f_; }
    const ShortestPathTree& tree() const { return tree_; }

    void save(std::ostream& out) const;
    static OracleConst load(std::istream& in);

private:
    friend class OracleCompact;

    struct VertexTables {
        AuxGraph aux;
        std::vector<Weight> dist;      // q*q all-pairs over aux nodes
        std::vector<int> next;         // next aux-edge index on best path
        std::vector<int> selection;    // triangular (eta, entry) -> root index
    };

    int f_ = 1;
    ShortestPathTree tree_;
    LcaIndex lca_;
    std::vector<VertexTables> per_vertex_;

    void build_tables();
    // Shared dispatch: classifies the target, fills the component root and
    // table block. Returns false when the answer is already final (target
    // in the root component or outside the tree).
    bool dispatch(const PathFailure& fail, int target, int& h_idx, Weight& early,
                  QueryStats* stats) const;
    std::vector<int> expand_aux_path(const VertexTables& vt, int from_idx, int to_idx) const;
};

// Smaller oracle trading query time for size: per vertex only a seeded
// (2k-1)-approximate distance oracle over the reconnection graph is kept,
// and the re-entry root is scanned over the O(f) admissible candidates at
// query time.
class OracleCompact {
public:
    OracleCompact() = default;
    OracleCompact(const WeightedGraph& g, const ShortestPathTree& t, int f, int k,
                  std::uint64_t seed = 0xc0ffee);

    QueryAnswer query(const PathFailure& fail, int target, bool want_path,
                      QueryStats* stats = nullptr) const;

    int f() const { return f_; }
    int k() const { return k_; }
    const ShortestPathTree& tree() const { return tree_; }

    void save(std::ostream& out) const;
    static OracleCompact load(std::istream& in);

private:
    struct VertexTables {
        AuxGraph aux;
        SmallDistanceOracle oracle;
        std::vector<int> edge_at;  // q*q -> aux edge index, -1
    };

    int f_ = 1;
    int k_ = 1;
    std::uint64_t seed_ = 0;
    ShortestPathTree tree_;
    LcaIndex lca_;
    std::vector<VertexTables> per_vertex_;

    void build_tables(std::vector<AuxGraph> aux);
};

// Tree serialization shared by all oracle blobs.
void write_tree_block(std::ostream& out, const ShortestPathTree& t);
ShortestPathTree read_tree_block(std::istream& in, int n, int root);

}  // namespace paspt
