#include "sbe/graph.hpp"

#include "sbe/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace sbe {

std::uint64_t VertexSet::hash() const {
    std::uint64_t h = mix64(static_cast<std::uint64_t>(universe_));
    h = mix64(h ^ word0_);
    for (std::uint64_t w : rest_) h = mix64(h ^ w);
    return h;
}

bool canonical_less(const VertexSet& a, const VertexSet& b) {
    assert(a.universe_ == b.universe_);
    const int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t i = a.rest_.size(); i-- > 0;)
        if (a.rest_[i] != b.rest_[i]) return a.rest_[i] < b.rest_[i];
    return a.word0_ < b.word0_;
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.order.resize(static_cast<std::size_t>(n));
    std::iota(p.order.begin(), p.order.end(), 0);
    p.rank = p.order;
    return p;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 1) throw std::out_of_range("graph: vertex count must be at least 1");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop rejected");
        if (adj_[static_cast<std::size_t>(u)].contains(v))
            throw std::invalid_argument("graph: duplicate edge rejected");
        adj_[static_cast<std::size_t>(u)].add(v);
        adj_[static_cast<std::size_t>(v)].add(u);
    }
    m_ = static_cast<std::int64_t>(edge_list.size());
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = neighbors(u).next_member(u); v < n_; v = neighbors(u).next_member(v))
            out.emplace_back(u, v);
    return out;
}

std::uint64_t Graph::hash() const {
    std::uint64_t h = mix64(static_cast<std::uint64_t>(n_));
    for (int v = 0; v < n_; ++v) h = mix64(h ^ adj_[static_cast<std::size_t>(v)].hash());
    return h;
}

namespace {

// Edges are indexed 0..n(n-1)/2-1 in ascending lexicographic order of
// (u, v) with u < v: base(u) = number of pairs whose first endpoint
// precedes u.
std::int64_t pair_base(int n, std::int64_t u) {
    return u * (2 * static_cast<std::int64_t>(n) - u - 1) / 2;
}

std::pair<int, int> decode_edge(int n, std::int64_t k) {
    const double nd = static_cast<double>(n);
    double disc = (nd - 0.5) * (nd - 0.5) - 2.0 * static_cast<double>(k);
    if (disc < 0) disc = 0;
    auto u = static_cast<std::int64_t>(nd - 0.5 - std::sqrt(disc));
    u = std::clamp<std::int64_t>(u, 0, n - 2);
    while (u + 1 <= n - 2 && pair_base(n, u + 1) <= k) ++u;
    while (pair_base(n, u) > k) --u;
    const std::int64_t v = u + 1 + (k - pair_base(n, u));
    return {static_cast<int>(u), static_cast<int>(v)};
}

} // namespace

Graph random_graph(int n, std::int64_t m, std::uint64_t seed) {
    if (n < 1) throw std::out_of_range("random_graph: vertex count must be at least 1");
    const std::int64_t all = Graph::max_edges(n);
    if (m < 0 || m > all)
        throw std::out_of_range("random_graph: edge count " + std::to_string(m) +
                                " outside [0, " + std::to_string(all) + "]");

    // Floyd's sampling of m distinct indices from [0, all).
    SplitMix64 rng(seed);
    std::unordered_set<std::int64_t> picked;
    picked.reserve(static_cast<std::size_t>(m) * 2 + 1);
    for (std::int64_t j = all - m; j < all; ++j) {
        const auto t = static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(j) + 1));
        if (!picked.insert(t).second) picked.insert(j);
    }

    std::vector<std::pair<int, int>> edge_list;
    edge_list.reserve(static_cast<std::size_t>(m));
    for (std::int64_t k : picked) edge_list.push_back(decode_edge(n, k));
    return Graph(n, edge_list);
}

Permutation degree_ordering(const Graph& g, OrderingMode mode) {
    const int n = g.vertex_count();
    Permutation p = Permutation::identity(n);
    if (mode != OrderingMode::Arbitrary) {
        std::vector<int> deg(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
        std::sort(p.order.begin(), p.order.end(), [&](int a, int b) {
            const int da = deg[static_cast<std::size_t>(a)], db = deg[static_cast<std::size_t>(b)];
            if (da != db) return mode == OrderingMode::AscendingDegree ? da < db : da > db;
            return a < b;
        });
        for (int i = 0; i < n; ++i) p.rank[static_cast<std::size_t>(p.order[static_cast<std::size_t>(i)])] = i;
    }
    return p;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    assert(s.universe() == g.vertex_count());
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

std::int64_t induced_edge_count(const Graph& g, const VertexSet& s) {
    assert(s.universe() == g.vertex_count());
    std::int64_t twice = 0;
    for (int v : s) twice += g.neighbors(v).intersect_count(s);
    return twice / 2;
}

int induced_degree(const Graph& g, const VertexSet& s, int v) {
    if (v < 0 || v >= g.vertex_count() || !s.contains(v))
        throw std::invalid_argument("induced_degree: vertex is not a member of the set");
    return g.neighbors(v).intersect_count(s);
}

const char* ordering_name(OrderingMode mode) {
    switch (mode) {
    case OrderingMode::Arbitrary: return "arbitrary";
    case OrderingMode::AscendingDegree: return "ascending";
    case OrderingMode::DescendingDegree: return "descending";
    }
    return "?";
}

} // namespace sbe
