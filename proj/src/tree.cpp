#include "sbe/tree.hpp"

#include <stdexcept>
#include <unordered_set>

namespace sbe {

std::optional<std::pair<int, int>> find_split_edge(const Graph& g, const VertexSet& s,
                                                   const Permutation& perm, EdgeRule rule) {
    assert(s.universe() == g.vertex_count());
    (void)rule; // LexFirst is the only rule so far
    int u = -1;
    for (int cand : perm.order) {
        if (s.contains(cand) && g.neighbors(cand).intersects(s)) {
            u = cand;
            break;
        }
    }
    if (u < 0) return std::nullopt;
    for (int cand : perm.order)
        if (cand != u && s.contains(cand) && g.neighbors(u).contains(cand))
            return std::make_pair(u, cand);
    return std::nullopt; // unreachable: u has a neighbor in s
}

std::pair<VertexSet, VertexSet> split_node(const Graph& g, const VertexSet& s,
                                           std::pair<int, int> edge) {
    const auto [u, v] = edge;
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() ||
        !s.contains(u) || !s.contains(v))
        throw std::invalid_argument("split_node: edge endpoints must be members of the node");
    if (!g.has_edge(u, v))
        throw std::invalid_argument("split_node: endpoints are not adjacent");
    return {s.without(u), s.without(v)};
}

Stability stability(const Graph& g, const VertexSet& s) {
    const int k = s.count();
    Stability total = 0;
    for (int v : s) total += Stability(k, g.neighbors(v).intersect_count(s) + 1);
    return total;
}

std::vector<std::size_t> SbeTree::layer_widths() const {
    std::vector<std::size_t> widths;
    for (const Node& node : nodes) {
        if (static_cast<std::size_t>(node.depth) >= widths.size())
            widths.resize(static_cast<std::size_t>(node.depth) + 1, 0);
        ++widths[static_cast<std::size_t>(node.depth)];
    }
    return widths;
}

std::vector<int> SbeTree::leaf_ids() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].leaf()) out.push_back(static_cast<int>(i));
    return out;
}

SbeTree build_full_tree(const Graph& g, const Permutation& perm, EdgeRule rule,
                        int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw std::length_error("build_full_tree: graph has " +
                                std::to_string(g.vertex_count()) +
                                " vertices, above the full-tree cap of " +
                                std::to_string(max_vertices));
    SbeTree tree;
    tree.nodes.push_back({g.vertices(), 0, -1, -1, -1});
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        const VertexSet content = tree.nodes[i].content; // copy: vector may grow
        const auto edge = find_split_edge(g, content, perm, rule);
        if (!edge) continue;
        auto [left, right] = split_node(g, content, *edge);
        const int depth = tree.nodes[i].depth + 1;
        tree.nodes[i].left = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({std::move(left), depth, static_cast<int>(i), -1, -1});
        tree.nodes[i].right = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({std::move(right), depth, static_cast<int>(i), -1, -1});
    }
    return tree;
}

LayerExpansion expand_layer(const Graph& g, const Layer& layer, const Permutation& perm,
                            EdgeRule rule, bool uniquify) {
    LayerExpansion out;
    out.next.depth = layer.depth + 1;
    out.next.nodes.reserve(layer.nodes.size() * 2);
    std::unordered_set<VertexSet, VertexSetHash> seen;
    if (uniquify) seen.reserve(layer.nodes.size() * 2);

    for (const VertexSet& node : layer.nodes) {
        const auto edge = find_split_edge(g, node, perm, rule);
        if (!edge)
            throw std::invalid_argument("expand_layer: input layer contains an independent node");
        auto [left, right] = split_node(g, node, *edge);
        if (!uniquify || seen.insert(left).second) out.next.nodes.push_back(std::move(left));
        if (!uniquify || seen.insert(right).second) out.next.nodes.push_back(std::move(right));
    }
    for (const VertexSet& child : out.next.nodes)
        if (is_independent(g, child)) out.independents.push_back(child);
    return out;
}

} // namespace sbe
