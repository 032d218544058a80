#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sbe/oracle.hpp"
#include "sbe/rng.hpp"
#include "sbe/tree.hpp"
#include "test_util.hpp"

#include <unordered_map>

using namespace sbe;
using namespace sbe::test;

namespace {

Permutation id_perm(const Graph& g) { return Permutation::identity(g.vertex_count()); }

} // namespace

TEST_CASE("find_split_edge picks the perm-first internal edge") {
    const Graph k3 = complete_graph(3);
    const auto edge = find_split_edge(k3, k3.vertices(), id_perm(k3), EdgeRule::LexFirst);
    REQUIRE(edge.has_value());
    CHECK(*edge == std::make_pair(0, 1));

    // independent set: no edge to split on
    const Graph c5 = cycle_graph(5);
    CHECK(!find_split_edge(c5, vs(c5, {0, 2}), id_perm(c5), EdgeRule::LexFirst).has_value());
    CHECK(!find_split_edge(c5, VertexSet(5), id_perm(c5), EdgeRule::LexFirst).has_value());

    // path 0-1-2 under permutation order (1,0,2): 1 splits first, toward 0
    const Graph p3 = path_graph(3);
    Permutation perm;
    perm.order = {1, 0, 2};
    perm.rank = {1, 0, 2};
    const auto swapped = find_split_edge(p3, p3.vertices(), perm, EdgeRule::LexFirst);
    REQUIRE(swapped.has_value());
    CHECK(*swapped == std::make_pair(1, 0));
}

TEST_CASE("split_node removes one endpoint per side") {
    const Graph k2 = complete_graph(2);
    const auto [l2, r2] = split_node(k2, k2.vertices(), {0, 1});
    CHECK(l2.to_vector() == std::vector<int>{1});
    CHECK(r2.to_vector() == std::vector<int>{0});

    const Graph k3 = complete_graph(3);
    const auto [l3, r3] = split_node(k3, k3.vertices(), {0, 1});
    CHECK(l3.to_vector() == std::vector<int>{1, 2});
    CHECK(r3.to_vector() == std::vector<int>{0, 2});
}

TEST_CASE("split_node rejects bad edges") {
    const Graph p3 = path_graph(3);
    CHECK_THROWS_AS(split_node(p3, vs(p3, {1, 2}), {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(split_node(p3, vs(p3, {0, 1}), {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(split_node(p3, p3.vertices(), {0, 2}), std::invalid_argument);
}

TEST_CASE("split laws on random descents") {
    SplitMix64 rng(17);
    for (int i = 0; i < 25; ++i) {
        const int n = 2 + static_cast<int>(rng.bounded(11));
        const std::int64_t all = Graph::max_edges(n);
        const auto m = static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(all) + 1));
        const Graph g = random_graph(n, m, rng.next());
        const Permutation perm = id_perm(g);
        VertexSet node = g.vertices();
        while (const auto edge = find_split_edge(g, node, perm, EdgeRule::LexFirst)) {
            const auto [left, right] = split_node(g, node, *edge);
            CHECK(left.count() == node.count() - 1);
            CHECK(right.count() == node.count() - 1);
            CHECK((left | right) == node);
            CHECK((left & right) == node.without(edge->first).without(edge->second));
            node = (rng.next() & 1) ? left : right;
        }
        CHECK(is_independent(g, node));
    }
}

TEST_CASE("stability on the worked examples") {
    const Graph e3 = edgeless_graph(3);
    CHECK(stability(e3, e3.vertices()) == 9);

    const Graph k3 = complete_graph(3);
    CHECK(stability(k3, k3.vertices()) == 3);

    const Graph p3 = path_graph(3); // 3/2 + 3/3 + 3/2
    CHECK(stability(p3, p3.vertices()) == 4);

    const Graph c5 = cycle_graph(5);
    CHECK(stability(c5, vs(c5, {2, 3, 4})) == 4);
    CHECK(stability(c5, vs(c5, {1, 3, 4})) == 6);
    CHECK(stability(c5, vs(c5, {1, 2, 3, 4})) == Stability(20, 3));

    CHECK(stability(k3, VertexSet(3)) == 0); // degenerate, documented
}

TEST_CASE("stability bounds and their equality cases") {
    SplitMix64 rng(23);
    for (int i = 0; i < 40; ++i) {
        const int n = 1 + static_cast<int>(rng.bounded(10));
        const std::int64_t all = Graph::max_edges(n);
        const auto m = static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(all) + 1));
        const Graph g = random_graph(n, m, rng.next());
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (rng.next() & 1) s.add(v);
        if (s.empty()) continue;
        const int k = s.count();
        const Stability value = stability(g, s);
        CHECK(value >= k);
        CHECK(value <= k * k);
        CHECK((value == k * k) == is_independent(g, s));
        const bool clique =
            induced_edge_count(g, s) == static_cast<std::int64_t>(k) * (k - 1) / 2;
        CHECK((value == k) == clique);
    }
}

TEST_CASE("full tree of K3") {
    const Graph k3 = complete_graph(3);
    const SbeTree tree = build_full_tree(k3, id_perm(k3), EdgeRule::LexFirst);
    CHECK(tree.size() == 7);
    CHECK(tree.layer_widths() == std::vector<std::size_t>{1, 2, 4});
    CHECK(tree.root().content == k3.vertices());

    std::vector<VertexSet> leaves;
    for (int id : tree.leaf_ids())
        leaves.push_back(tree.nodes[static_cast<std::size_t>(id)].content);
    CHECK(as_multiset_of_sets(leaves) ==
          std::multiset<std::vector<int>>{{0}, {1}, {2}, {2}});
    for (const auto& node : tree.nodes) {
        CHECK(node.content.count() == 3 - node.depth);
        if (!node.leaf()) {
            CHECK(tree.nodes[static_cast<std::size_t>(node.left)].parent >= 0);
            CHECK(tree.nodes[static_cast<std::size_t>(node.right)].depth == node.depth + 1);
        }
    }
}

TEST_CASE("full tree degenerate cases") {
    const Graph e3 = edgeless_graph(3);
    CHECK(build_full_tree(e3, id_perm(e3), EdgeRule::LexFirst).size() == 1);

    const Graph k2 = complete_graph(2);
    const SbeTree tree = build_full_tree(k2, id_perm(k2), EdgeRule::LexFirst);
    CHECK(tree.size() == 3);
    CHECK(tree.nodes[1].content.to_vector() == std::vector<int>{1});
    CHECK(tree.nodes[2].content.to_vector() == std::vector<int>{0});
}

TEST_CASE("full tree refuses graphs above the cap") {
    const Graph big = edgeless_graph(17);
    CHECK_THROWS_AS(build_full_tree(big, id_perm(big), EdgeRule::LexFirst), std::length_error);
    try {
        build_full_tree(big, id_perm(big), EdgeRule::LexFirst);
        FAIL("expected std::length_error");
    } catch (const std::length_error& e) {
        CHECK(std::string(e.what()).find("16") != std::string::npos); // names the cap
    }
    CHECK_NOTHROW(build_full_tree(big, id_perm(big), EdgeRule::LexFirst, 17));
}

TEST_CASE("full tree laws against the enumeration oracle") {
    SplitMix64 rng(29);
    for (int i = 0; i < 20; ++i) {
        const int n = 4 + static_cast<int>(rng.bounded(6));
        const std::int64_t all = Graph::max_edges(n);
        const auto m = static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(all) + 1));
        const Graph g = random_graph(n, m, rng.next());
        const int alpha = alpha_by_enumeration(g).alpha;
        for (auto mode : {OrderingMode::Arbitrary, OrderingMode::AscendingDegree,
                          OrderingMode::DescendingDegree}) {
            const SbeTree tree =
                build_full_tree(g, degree_ordering(g, mode), EdgeRule::LexFirst);

            std::vector<VertexSet> leaves;
            std::unordered_map<VertexSet, int, VertexSetHash> depth_of;
            for (const auto& node : tree.nodes) {
                CHECK(node.content.count() == n - node.depth);
                const auto [it, fresh] = depth_of.try_emplace(node.content, node.depth);
                CHECK(it->second == node.depth); // duplicates only within a layer
                if (node.leaf()) {
                    CHECK(is_independent(g, node.content));
                    leaves.push_back(node.content);
                }
            }

            const auto widths = tree.layer_widths();
            for (int l = 0; l < n - alpha; ++l)
                CHECK(widths[static_cast<std::size_t>(l)] == std::size_t{1} << l);

            const auto leaf_set = as_set_of_sets(leaves);
            for (const VertexSet& maximal : enumerate_maximal_sets(g))
                CHECK(leaf_set.count(maximal.to_vector()) == 1);
        }
    }
}

TEST_CASE("expand_layer on K3 and P3") {
    const Graph k3 = complete_graph(3);
    const Layer root{0, {k3.vertices()}};
    const LayerExpansion first = expand_layer(k3, root, id_perm(k3), EdgeRule::LexFirst, false);
    CHECK(first.next.depth == 1);
    REQUIRE(first.next.nodes.size() == 2);
    CHECK(first.next.nodes[0].to_vector() == std::vector<int>{1, 2});
    CHECK(first.next.nodes[1].to_vector() == std::vector<int>{0, 2});
    CHECK(first.independents.empty());

    const Graph p3 = path_graph(3);
    const Layer proot{0, {p3.vertices()}};
    const LayerExpansion pfirst = expand_layer(p3, proot, id_perm(p3), EdgeRule::LexFirst, false);
    CHECK(as_set_of_sets(pfirst.next.nodes) ==
          std::set<std::vector<int>>{{1, 2}, {0, 2}});
    REQUIRE(pfirst.independents.size() == 1);
    CHECK(pfirst.independents[0].to_vector() == std::vector<int>{0, 2});

    // layer 1 of K3, uniquified: the duplicate child collapses
    const LayerExpansion second =
        expand_layer(k3, first.next, id_perm(k3), EdgeRule::LexFirst, true);
    CHECK(second.next.depth == 2);
    CHECK(second.next.nodes.size() == 3);
    CHECK(as_set_of_sets(second.next.nodes) ==
          std::set<std::vector<int>>{{0}, {1}, {2}});
    CHECK(as_set_of_sets(second.independents) == as_set_of_sets(second.next.nodes));

    // without uniquify the duplicate stays
    const LayerExpansion dup =
        expand_layer(k3, first.next, id_perm(k3), EdgeRule::LexFirst, false);
    CHECK(dup.next.nodes.size() == 4);
}

TEST_CASE("expand_layer rejects layers holding an independent node") {
    const Graph p3 = path_graph(3);
    const Layer bad{1, {vs(p3, {0, 2})}};
    CHECK_THROWS_AS(expand_layer(p3, bad, id_perm(p3), EdgeRule::LexFirst, true),
                    std::invalid_argument);
}
