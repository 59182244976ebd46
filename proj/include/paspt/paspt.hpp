#pragma once

#include <iosfwd>
#include <vector>

#include "paspt/graph.hpp"
#include "paspt/spt.hpp"

namespace paspt {

// Failure of `len` consecutive tree edges on the root path ending at
// `deepest`. Fully determined by (deepest, len).
struct PathFailure {
    int deepest = -1;
    int len = 0;
    std::vector<int> edges;  // failed tree edge ids, top-down

    static PathFailure make(const ShortestPathTree& t, int deepest, int len);
};

// Reconnection graph associated with a vertex v: one node per component of
// the tree minus the maximal failure span ending at v, one edge per
// component pair carrying the best crossing original edge.
struct AuxGraph {
    int owner = -1;
    int span_len = 0;        // min(f, level(owner))
    std::vector<int> roots;  // component roots: tree root first, then the
                             // on-path roots top-down (deepest last)
    struct AuxEdge {
        int a, b;            // indices into roots, a < b
        Weight w;            // via-tree reconnection value
        int witness;         // original edge id realizing w
        int wu, wv;          // witness endpoints, wu in component a, wv in b
    };
    std::vector<AuxEdge> edges;

    int num_nodes() const { return static_cast<int>(roots.size()); }
};

AuxGraph build_aux_graph(const WeightedGraph& g, const ShortestPathTree& t,
                         int v, int f);

enum class Variant { general, two_path };

// Fault-tolerant structure: the fixed tree plus a sparse set of auxiliary
// edges. For the general variant a failure of len <= f edges leaves every
// surviving vertex within stretch (2k-1)(2*len+1) of its true post-failure
// distance.
struct FtStructure {
    Variant variant = Variant::general;
    int f = 1;
    int k = 1;
    std::vector<int> extra;  // auxiliary edge ids, ascending, disjoint from tree edges

    // All edge ids of the structure (tree + extra).
    std::vector<int> all_edges(const ShortestPathTree& t) const;
    int num_edges(const ShortestPathTree& t) const {
        return t.reached - 1 + static_cast<int>(extra.size());
    }
};

FtStructure build_paspt(const WeightedGraph& g, const ShortestPathTree& t,
                        int f, int k = 1);

// Exact distances from the root in the structure minus the failed edges.
std::vector<Weight> structure_distance(const WeightedGraph& g,
                                       const ShortestPathTree& t,
                                       const FtStructure& h,
                                       const PathFailure& fail);

// Versioned text round trip: "paspt v1 <n> <f> <k> <variant>" header, then
// one "u v w" line per auxiliary edge.
void write_structure(std::ostream& out, const WeightedGraph& g, const FtStructure& h);
FtStructure read_structure(std::istream& in, const WeightedGraph& g);

}  // namespace paspt
