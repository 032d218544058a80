#ifndef SBE_TEST_UTIL_HPP
#define SBE_TEST_UTIL_HPP

#include "sbe/graph.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace sbe::test {

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    return Graph(n, std::vector<std::pair<int, int>>(edges));
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n - 1, 0);
    return Graph(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph edgeless_graph(int n) { return Graph(n, {}); }

// Star with center 0 and n-1 rays.
inline Graph star_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph(n, edges);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) edges.emplace_back(u, v);
    return Graph(a + b, edges);
}

// Outer cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
    return make_graph(10, {{0, 1},
                           {1, 2},
                           {2, 3},
                           {3, 4},
                           {4, 0},
                           {5, 7},
                           {7, 9},
                           {9, 6},
                           {6, 8},
                           {8, 5},
                           {0, 5},
                           {1, 6},
                           {2, 7},
                           {3, 8},
                           {4, 9}});
}

inline VertexSet vs(const Graph& g, std::initializer_list<int> members) {
    return VertexSet::of(g.vertex_count(), members);
}

// Plain include/exclude recursion, written to look nothing like the library
// oracles; reference value for small n.
inline int brute_alpha(const Graph& g, const VertexSet& candidates) {
    const int v = candidates.first();
    if (v < 0) return 0;
    const int skipped = brute_alpha(g, candidates.without(v));
    VertexSet taken = candidates.minus(g.neighbors(v));
    taken.remove(v);
    return std::max(skipped, 1 + brute_alpha(g, taken));
}

inline int brute_alpha(const Graph& g) { return brute_alpha(g, g.vertices()); }

// Order-insensitive comparison form.
inline std::set<std::vector<int>> as_set_of_sets(const std::vector<VertexSet>& sets) {
    std::set<std::vector<int>> out;
    for (const VertexSet& s : sets) out.insert(s.to_vector());
    return out;
}

inline std::multiset<std::vector<int>> as_multiset_of_sets(const std::vector<VertexSet>& sets) {
    std::multiset<std::vector<int>> out;
    for (const VertexSet& s : sets) out.insert(s.to_vector());
    return out;
}

} // namespace sbe::test

#endif
