#include "sbe/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace sbe {
namespace {

VertexSet set_from_mask(int n, std::uint64_t mask) {
    VertexSet s(n);
    while (mask) {
        s.add(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return s;
}

// Adjacency packed into one word per vertex, for graphs that fit.
struct MaskOps {
    using Set = std::uint64_t;
    std::vector<Set> adj;
    int n = 0;

    explicit MaskOps(const Graph& g) : n(g.vertex_count()) {
        adj.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) adj.push_back(g.neighbors(v).low_word());
    }

    Set full() const { return n == 64 ? ~0ULL : ((1ULL << n) - 1); }
    Set none() const { return 0; }
    bool empty(Set s) const { return s == 0; }
    int count(Set s) const { return std::popcount(s); }
    void add(Set& s, int v) const { s |= 1ULL << v; }
    void remove(Set& s, int v) const { s &= ~(1ULL << v); }
    bool contains(Set s, int v) const { return (s >> v) & 1u; }
    int degree_in(int v, Set s) const { return std::popcount(adj[static_cast<std::size_t>(v)] & s); }
    Set without_closed_neighborhood(Set s, int v) const {
        return s & ~(adj[static_cast<std::size_t>(v)] | (1ULL << v));
    }
    Set adjacency(int v) const { return adj[static_cast<std::size_t>(v)]; }
    Set intersect(Set a, Set b) const { return a & b; }
    int members(Set s, int* buf) const {
        int k = 0;
        while (s) {
            buf[k++] = std::countr_zero(s);
            s &= s - 1;
        }
        return k;
    }
};

// Same interface over VertexSet, for graphs wider than one word.
struct WideOps {
    using Set = VertexSet;
    const Graph* g;
    int n;

    explicit WideOps(const Graph& gr) : g(&gr), n(gr.vertex_count()) {}

    Set full() const { return g->vertices(); }
    Set none() const { return VertexSet(n); }
    bool empty(const Set& s) const { return s.empty(); }
    int count(const Set& s) const { return s.count(); }
    void add(Set& s, int v) const { s.add(v); }
    void remove(Set& s, int v) const { s.remove(v); }
    bool contains(const Set& s, int v) const { return s.contains(v); }
    int degree_in(int v, const Set& s) const { return g->neighbors(v).intersect_count(s); }
    Set without_closed_neighborhood(const Set& s, int v) const {
        Set out = s.minus(g->neighbors(v));
        out.remove(v);
        return out;
    }
    Set adjacency(int v) const { return g->neighbors(v); }
    Set intersect(const Set& a, const Set& b) const { return a & b; }
    int members(const Set& s, int* buf) const {
        int k = 0;
        for (int v : s) buf[k++] = v;
        return k;
    }
};

template <class Ops>
struct MisSolver {
    const Ops& ops;
    int best = 0;
    typename Ops::Set best_set;
    std::uint64_t nodes = 0;
    std::vector<typename Ops::Set> cover;
    std::vector<int> buf;

    explicit MisSolver(const Ops& o) : ops(o), best_set(o.none()), buf(static_cast<std::size_t>(o.n)) {}

    // Upper bound on the independence number of cand: size of a greedy
    // clique cover (each clique meets any independent set at most once).
    int cover_bound(const typename Ops::Set& cand) {
        const int k = ops.members(cand, buf.data());
        cover.clear();
        for (int i = 0; i < k; ++i) {
            const int v = buf[static_cast<std::size_t>(i)];
            bool placed = false;
            for (auto& common : cover) {
                if (ops.contains(common, v)) {
                    common = ops.intersect(common, ops.adjacency(v));
                    placed = true;
                    break;
                }
            }
            if (!placed) cover.push_back(ops.adjacency(v));
        }
        return static_cast<int>(cover.size());
    }

    void descend(typename Ops::Set cand, typename Ops::Set chosen, int size) {
        ++nodes;
        for (;;) {
            if (ops.empty(cand)) {
                if (size > best) {
                    best = size;
                    best_set = chosen;
                }
                return;
            }
            // A vertex of induced degree <= 1 is always in some maximum set;
            // take the lowest-indexed one without branching.
            int forced = -1, branch_v = -1, branch_d = -1;
            const int k = ops.members(cand, buf.data());
            for (int i = 0; i < k; ++i) {
                const int v = buf[static_cast<std::size_t>(i)];
                const int d = ops.degree_in(v, cand);
                if (d <= 1) {
                    forced = v;
                    break;
                }
                if (d > branch_d) {
                    branch_d = d;
                    branch_v = v;
                }
            }
            if (forced >= 0) {
                ops.add(chosen, forced);
                ++size;
                cand = ops.without_closed_neighborhood(cand, forced);
                continue;
            }
            if (size + ops.count(cand) <= best) return;
            if (size + cover_bound(cand) <= best) return;

            auto incl = ops.without_closed_neighborhood(cand, branch_v);
            auto incl_chosen = chosen;
            ops.add(incl_chosen, branch_v);
            descend(std::move(incl), std::move(incl_chosen), size + 1);

            ops.remove(cand, branch_v);
            // loop around instead of recursing on the exclude branch
        }
    }
};

} // namespace

OracleResult alpha_exact(const Graph& g) {
    OracleResult res;
    if (g.vertex_count() <= 64) {
        MaskOps ops(g);
        MisSolver<MaskOps> solver(ops);
        solver.descend(ops.full(), ops.none(), 0);
        res.alpha = solver.best;
        res.witness = set_from_mask(g.vertex_count(), solver.best_set);
        res.node_budget_used = solver.nodes;
    } else {
        WideOps ops(g);
        MisSolver<WideOps> solver(ops);
        solver.descend(ops.full(), ops.none(), 0);
        res.alpha = solver.best;
        res.witness = std::move(solver.best_set);
        res.node_budget_used = solver.nodes;
    }
    return res;
}

EnumerationResult alpha_by_enumeration(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kEnumerationCap)
        throw std::length_error("alpha_by_enumeration: graph has " + std::to_string(n) +
                                " vertices, above the enumeration cap of " +
                                std::to_string(kEnumerationCap));
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v).low_word();

    const auto independent = [&](std::uint64_t mask) {
        for (std::uint64_t s = mask; s;) {
            const int v = std::countr_zero(s);
            s &= s - 1;
            if (adj[static_cast<std::size_t>(v)] & mask) return false;
        }
        return true;
    };

    EnumerationResult res;
    std::vector<std::uint64_t> best;
    const std::uint64_t limit = 1ULL << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        const int c = std::popcount(mask);
        if (c < res.alpha || !independent(mask)) continue;
        if (c > res.alpha) {
            res.alpha = c;
            best.clear();
        }
        best.push_back(mask);
    }
    res.maximum_sets.reserve(best.size());
    for (std::uint64_t mask : best) res.maximum_sets.push_back(set_from_mask(n, mask));
    std::sort(res.maximum_sets.begin(), res.maximum_sets.end(), canonical_less);
    return res;
}

std::vector<VertexSet> enumerate_maximal_sets(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaximalEnumerationCap)
        throw std::length_error("enumerate_maximal_sets: graph has " + std::to_string(n) +
                                " vertices, above the enumeration cap of " +
                                std::to_string(kMaximalEnumerationCap));
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v).low_word();
    const std::uint64_t all = (1ULL << n) - 1;

    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask <= all; ++mask) {
        bool ok = true;
        for (std::uint64_t s = mask; ok && s;) {
            const int v = std::countr_zero(s);
            s &= s - 1;
            if (adj[static_cast<std::size_t>(v)] & mask) ok = false;
        }
        if (!ok) continue;
        // maximal iff every outside vertex sees the set
        for (std::uint64_t s = all & ~mask; ok && s;) {
            const int v = std::countr_zero(s);
            s &= s - 1;
            if ((adj[static_cast<std::size_t>(v)] & mask) == 0) ok = false;
        }
        if (ok) out.push_back(set_from_mask(n, mask));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

} // namespace sbe
