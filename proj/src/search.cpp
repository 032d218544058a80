#include "sbe/search.hpp"

#include <stdexcept>
#include <utility>

namespace sbe {

Side choose_branch(const Graph& g, const VertexSet& left, const VertexSet& right,
                   BranchPolicy policy) {
    switch (policy) {
    case BranchPolicy::AlwaysLeft:
        return Side::Left;
    case BranchPolicy::FewestEdges:
        return induced_edge_count(g, right) < induced_edge_count(g, left) ? Side::Right
                                                                          : Side::Left;
    case BranchPolicy::MostStable:
        return stability(g, right) > stability(g, left) ? Side::Right : Side::Left;
    }
    return Side::Left;
}

SearchResult dfs_descend(const Graph& g, const SearchConfig& cfg,
                         std::optional<int> known_alpha, bool record_path) {
    const Permutation perm = degree_ordering(g, cfg.ordering);
    VertexSet node = g.vertices();

    SearchResult res;
    while (const auto edge = find_split_edge(g, node, perm, cfg.edge_rule)) {
        auto [left, right] = split_node(g, node, *edge);
        const Side side = choose_branch(g, left, right, cfg.policy);
        if (record_path) res.path.push_back({node.count(), side});
        node = side == Side::Left ? std::move(left) : std::move(right);
    }

    res.size = node.count();
    res.depth = g.vertex_count() - res.size;
    res.found = std::move(node);
    if (known_alpha) {
        res.alpha = known_alpha;
        res.success = res.size == *known_alpha;
    }
    return res;
}

LblResult lbl_search(const Graph& g, const Permutation& perm, EdgeRule rule) {
    Layer layer{0, {g.vertices()}};
    LblResult res;
    res.total_nodes = 1;

    std::vector<VertexSet> independents;
    if (is_independent(g, layer.nodes.front())) independents = layer.nodes;

    while (independents.empty()) {
        LayerExpansion expansion = expand_layer(g, layer, perm, rule, /*uniquify=*/true);
        layer = std::move(expansion.next);
        independents = std::move(expansion.independents);
        res.total_nodes += layer.nodes.size();
    }

    res.depth = layer.depth;
    res.alpha = g.vertex_count() - layer.depth;
    res.maximum_sets = std::move(independents);
    return res;
}

const char* policy_name(BranchPolicy policy) {
    switch (policy) {
    case BranchPolicy::AlwaysLeft: return "always-left";
    case BranchPolicy::FewestEdges: return "fewest-edges";
    case BranchPolicy::MostStable: return "most-stable";
    }
    return "?";
}

} // namespace sbe
