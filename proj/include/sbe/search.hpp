#ifndef SBE_SEARCH_HPP
#define SBE_SEARCH_HPP

#include "sbe/graph.hpp"
#include "sbe/tree.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sbe {

enum class BranchPolicy { AlwaysLeft, FewestEdges, MostStable };
enum class Side { Left, Right };

// One depth-first descent is fully determined by these three choices.
struct SearchConfig {
    OrderingMode ordering = OrderingMode::Arbitrary;
    BranchPolicy policy = BranchPolicy::MostStable;
    EdgeRule edge_rule = EdgeRule::LexFirst;

    bool operator==(const SearchConfig&) const = default;
};

struct PathStep {
    int cardinality = 0; // node size before the split
    Side chosen = Side::Left;

    bool operator==(const PathStep&) const = default;
};

struct SearchResult {
    VertexSet found;
    int size = 0;
    int depth = 0; // descent length, = n - size
    std::optional<int> alpha;
    std::optional<bool> success; // size == alpha, when alpha is known
    std::vector<PathStep> path;  // filled only when the descent was traced
};

// Which child to descend into. FewestEdges takes the side with fewer
// induced edges, MostStable the side with strictly larger stability (exact
// rational comparison); all ties go Left.
Side choose_branch(const Graph& g, const VertexSet& left, const VertexSet& right,
                   BranchPolicy policy);

// Greedy root-to-leaf descent: split the current node, keep the branch the
// policy picks, stop at the first independent node. No backtracking.
SearchResult dfs_descend(const Graph& g, const SearchConfig& cfg,
                         std::optional<int> known_alpha = std::nullopt,
                         bool record_path = false);

struct LblResult {
    int alpha = 0;
    std::vector<VertexSet> maximum_sets; // every maximum independent set of g
    int depth = 0;                       // stopping layer depth, = n - alpha
    std::uint64_t total_nodes = 0;       // distinct nodes over all layers built
};

// Exact layer-by-layer search: expand uniquified layers from {V(G)} until
// one contains an independent node. That layer's independent members are
// exactly the maximum independent sets, whatever the rule or ordering.
LblResult lbl_search(const Graph& g, const Permutation& perm, EdgeRule rule);

const char* policy_name(BranchPolicy policy);

} // namespace sbe

#endif
