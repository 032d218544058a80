#ifndef SBE_TREE_HPP
#define SBE_TREE_HPP

#include "sbe/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace sbe {

// Rule for picking the edge a node is split on. The permutation in force
// decides what "first" means.
enum class EdgeRule { LexFirst };

// Exact rational stability score of a node: sum over members v of
// k / (deg(v) in the induced subgraph + 1), where k is the node's own
// cardinality. Exact arithmetic keeps branch choices platform-independent;
// floating point would make ties unstable.
using Stability = boost::multiprecision::cpp_rational;

// First internal edge of s under the rule, as (u, v) with u preceding v in
// perm. Absent iff s is independent. Under LexFirst, u is the perm-earliest
// member of s with a neighbor inside s, and v is u's perm-earliest such
// neighbor.
std::optional<std::pair<int, int>> find_split_edge(const Graph& g, const VertexSet& s,
                                                   const Permutation& perm, EdgeRule rule);

// The split of a node on an internal edge (u, v): left child s - u, right
// child s - v. The endpoints must be adjacent members of s.
std::pair<VertexSet, VertexSet> split_node(const Graph& g, const VertexSet& s,
                                           std::pair<int, int> edge);

// Stability of s (0 for the empty set, a degenerate case searches never
// reach). Bounds: k <= stability(s) <= k^2 for |s| = k, with equality at
// k^2 exactly on independent sets and at k exactly on induced cliques.
Stability stability(const Graph& g, const VertexSet& s);

inline constexpr int kDefaultFullTreeCap = 16;

// A fully expanded split tree: root is V(G), every internal node splits on
// its rule-chosen edge, every leaf is an independent set. Duplicates are
// retained. Nodes are stored in breadth-first order, root first.
struct SbeTree {
    struct Node {
        VertexSet content;
        int depth = 0;
        int parent = -1;
        int left = -1;
        int right = -1;
        bool leaf() const { return left < 0; }
    };

    std::vector<Node> nodes;

    const Node& root() const { return nodes.front(); }
    std::size_t size() const { return nodes.size(); }

    // Node count per depth; index l is the width of layer l.
    std::vector<std::size_t> layer_widths() const;
    std::vector<int> leaf_ids() const;
};

// Exhaustive construction. Tree size is exponential in n, so graphs above
// max_vertices are rejected with std::length_error.
SbeTree build_full_tree(const Graph& g, const Permutation& perm, EdgeRule rule,
                        int max_vertices = kDefaultFullTreeCap);

// One breadth-first layer: all node contents at a fixed depth. Every member
// has cardinality n - depth; uniquified layers hold no duplicates.
struct Layer {
    int depth = 0;
    std::vector<VertexSet> nodes;
};

struct LayerExpansion {
    Layer next;
    std::vector<VertexSet> independents; // members of next that are independent
};

// Expands every node of the layer into its two children, in layer order,
// left child first. With uniquify, duplicates are dropped keeping the first
// occurrence. No input node may be independent (expanding a terminal layer
// is a caller bug) - that throws std::invalid_argument.
LayerExpansion expand_layer(const Graph& g, const Layer& layer, const Permutation& perm,
                            EdgeRule rule, bool uniquify);

} // namespace sbe

#endif
