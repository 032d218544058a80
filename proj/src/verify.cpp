#include "sbe/verify.hpp"

#include "sbe/dimacs.hpp"
#include "sbe/experiments.hpp"
#include "sbe/graph.hpp"
#include "sbe/oracle.hpp"
#include "sbe/rng.hpp"
#include "sbe/search.hpp"
#include "sbe/tree.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <unordered_map>

namespace sbe {
namespace {

struct CheckOutcome {
    bool ok = true;
    std::string detail;
};

std::string describe(const Graph& g, std::uint64_t seed) {
    return "n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) +
           " seed=" + std::to_string(seed);
}

VertexSet random_subset(const Graph& g, SplitMix64& rng) {
    VertexSet s(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (rng.next() & 1) s.add(v);
    return s;
}

std::vector<std::int64_t> density_grid(int n) {
    const std::int64_t all = Graph::max_edges(n);
    std::vector<std::int64_t> out{0};
    for (std::int64_t m : {all / 4, all / 2, 3 * all / 4, all})
        if (m != out.back()) out.push_back(m);
    return out;
}

std::vector<SearchConfig> all_variants() {
    std::vector<SearchConfig> out;
    for (auto ordering : {OrderingMode::Arbitrary, OrderingMode::AscendingDegree,
                          OrderingMode::DescendingDegree})
        for (auto policy :
             {BranchPolicy::AlwaysLeft, BranchPolicy::FewestEdges, BranchPolicy::MostStable})
            out.push_back({ordering, policy, EdgeRule::LexFirst});
    return out;
}

std::vector<VertexSet> canonical(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), canonical_less);
    return sets;
}

CheckOutcome check_graph_invariants(VerifyLevel) {
    CheckOutcome out;
    int graphs = 0;
    for (int n : {1, 2, 3, 5, 8, 12, 16, 24}) {
        for (std::int64_t m : density_grid(n)) {
            for (std::uint64_t seed = 11; seed < 14; ++seed) {
                const Graph g = random_graph(n, m, seed);
                ++graphs;
                if (g.edge_count() != m)
                    return {false, "edge count mismatch, " + describe(g, seed)};
                std::int64_t degree_sum = 0;
                for (int v = 0; v < n; ++v) {
                    if (g.neighbors(v).contains(v))
                        return {false, "self-loop at " + std::to_string(v) + ", " + describe(g, seed)};
                    degree_sum += g.degree(v);
                    for (int u : g.neighbors(v))
                        if (!g.neighbors(u).contains(v))
                            return {false, "asymmetric adjacency, " + describe(g, seed)};
                }
                if (degree_sum != 2 * m)
                    return {false, "degree sum != 2m, " + describe(g, seed)};
                const auto edges = g.edges();
                if (static_cast<std::int64_t>(edges.size()) != m || !std::is_sorted(edges.begin(), edges.end()))
                    return {false, "edge list broken, " + describe(g, seed)};
            }
        }
    }
    out.detail = std::to_string(graphs) + " graphs";
    return out;
}

CheckOutcome check_uniformity(VerifyLevel level) {
    const int draws = level == VerifyLevel::Quick ? 12000 : 36000;
    std::map<std::uint64_t, int> freq;
    for (int i = 0; i < draws; ++i) freq[random_graph(5, 3, static_cast<std::uint64_t>(i)).hash()] += 1;
    if (freq.size() != 120)
        return {false, "expected 120 distinct 3-edge graphs on 5 vertices, saw " +
                           std::to_string(freq.size())};
    const double expect = 1.0 / 120.0;
    for (const auto& [hash, count] : freq) {
        const double f = static_cast<double>(count) / draws;
        if (f < expect - 0.01 || f > expect + 0.01)
            return {false, "relative frequency " + format_rate(f) + " outside 1/120 +- 0.01"};
    }
    return {true, std::to_string(draws) + " draws over 120 graphs"};
}

CheckOutcome check_degree_orderings(VerifyLevel) {
    int checked = 0;
    for (int n : {1, 4, 7, 12, 20}) {
        for (std::int64_t m : density_grid(n)) {
            const Graph g = random_graph(n, m, 77);
            for (auto mode : {OrderingMode::Arbitrary, OrderingMode::AscendingDegree,
                              OrderingMode::DescendingDegree}) {
                const Permutation p = degree_ordering(g, mode);
                ++checked;
                std::vector<int> sorted = p.order;
                std::sort(sorted.begin(), sorted.end());
                for (int i = 0; i < n; ++i)
                    if (sorted[static_cast<std::size_t>(i)] != i)
                        return {false, "order is not a permutation"};
                for (int i = 0; i < n; ++i)
                    if (p.rank[static_cast<std::size_t>(p.order[static_cast<std::size_t>(i)])] != i)
                        return {false, "rank is not the inverse of order"};
                for (int i = 0; i + 1 < n; ++i) {
                    const int a = p.order[static_cast<std::size_t>(i)];
                    const int b = p.order[static_cast<std::size_t>(i + 1)];
                    const int da = g.degree(a), db = g.degree(b);
                    bool ok = true;
                    switch (mode) {
                    case OrderingMode::Arbitrary: ok = a < b; break;
                    case OrderingMode::AscendingDegree: ok = da < db || (da == db && a < b); break;
                    case OrderingMode::DescendingDegree: ok = da > db || (da == db && a < b); break;
                    }
                    if (!ok) return {false, "ordering comparator violated"};
                }
            }
        }
    }
    return {true, std::to_string(checked) + " orderings"};
}

CheckOutcome check_induced_counts(VerifyLevel level) {
    const int reps = level == VerifyLevel::Quick ? 40 : 150;
    SplitMix64 rng(2024);
    for (int i = 0; i < reps; ++i) {
        const int n = 2 + static_cast<int>(rng.bounded(13));
        const std::int64_t m = static_cast<std::int64_t>(rng.bounded(
            static_cast<std::uint64_t>(Graph::max_edges(n)) + 1));
        const Graph g = random_graph(n, m, rng.next());
        const VertexSet s = random_subset(g, rng);
        std::int64_t twice = 0;
        for (int v : s) twice += induced_degree(g, s, v);
        const std::int64_t count = induced_edge_count(g, s);
        if (twice != 2 * count) return {false, "handshake identity failed"};
        std::int64_t brute = 0;
        for (int u : s)
            for (int v : s)
                if (u < v && g.has_edge(u, v)) ++brute;
        if (brute != count) return {false, "induced edge count mismatch"};
        if (is_independent(g, s) != (count == 0))
            return {false, "independence/edge-count equivalence failed"};
    }
    return {true, std::to_string(reps) + " graph/subset pairs"};
}

CheckOutcome check_stability_bounds(VerifyLevel level) {
    const int reps = level == VerifyLevel::Quick ? 60 : 200;
    SplitMix64 rng(4096);
    for (int i = 0; i < reps; ++i) {
        const int n = 1 + static_cast<int>(rng.bounded(12));
        const std::int64_t m = static_cast<std::int64_t>(rng.bounded(
            static_cast<std::uint64_t>(Graph::max_edges(n)) + 1));
        const Graph g = random_graph(n, m, rng.next());
        VertexSet s = random_subset(g, rng);
        if (s.empty()) {
            if (stability(g, s) != 0) return {false, "empty-set stability should be 0"};
            continue;
        }
        const int k = s.count();
        const Stability value = stability(g, s);
        if (value < k || value > k * k) return {false, "stability outside [k, k^2]"};
        const bool indep = is_independent(g, s);
        if ((value == k * k) != indep) return {false, "stability == k^2 must characterize independence"};
        const bool complete = induced_edge_count(g, s) == static_cast<std::int64_t>(k) * (k - 1) / 2;
        if ((value == k) != complete) return {false, "stability == k must characterize induced cliques"};
    }
    return {true, std::to_string(reps) + " nodes"};
}

CheckOutcome check_split_laws(VerifyLevel level) {
    const int reps = level == VerifyLevel::Quick ? 40 : 120;
    SplitMix64 rng(513);
    int splits = 0;
    for (int i = 0; i < reps; ++i) {
        const int n = 2 + static_cast<int>(rng.bounded(13));
        const std::int64_t all = Graph::max_edges(n);
        const std::int64_t m = 1 + static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(all)));
        const Graph g = random_graph(n, m, rng.next());
        const Permutation perm = degree_ordering(
            g, i % 2 == 0 ? OrderingMode::Arbitrary : OrderingMode::DescendingDegree);
        VertexSet node = g.vertices();
        while (const auto edge = find_split_edge(g, node, perm, EdgeRule::LexFirst)) {
            const auto [u, v] = *edge;
            if (!node.contains(u) || !node.contains(v) || !g.has_edge(u, v))
                return {false, "split edge is not an internal edge"};
            if (perm.rank[static_cast<std::size_t>(u)] > perm.rank[static_cast<std::size_t>(v)])
                return {false, "split edge endpoints out of permutation order"};
            const auto [left, right] = split_node(g, node, *edge);
            ++splits;
            if (left.count() != node.count() - 1 || right.count() != node.count() - 1)
                return {false, "child cardinality law failed"};
            if ((left | right) != node) return {false, "children must union to the parent"};
            if ((left & right).count() != node.count() - 2)
                return {false, "sibling intersection law failed"};
            node = (rng.next() & 1) ? left : right;
        }
        if (!is_independent(g, node)) return {false, "descent terminated on a dependent node"};
    }
    return {true, std::to_string(splits) + " splits"};
}

CheckOutcome check_full_tree_laws(VerifyLevel level) {
    std::vector<Graph> population;
    // every labeled graph on 4 vertices
    const std::vector<std::pair<int, int>> slots{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<std::pair<int, int>> edge_list;
        for (int b = 0; b < 6; ++b)
            if (mask & (1 << b)) edge_list.push_back(slots[static_cast<std::size_t>(b)]);
        population.emplace_back(4, edge_list);
    }
    const int extra = level == VerifyLevel::Quick ? 15 : 50;
    SplitMix64 rng(90210);
    for (int i = 0; i < extra; ++i) {
        const int n = 5 + static_cast<int>(rng.bounded(5));
        const std::int64_t m = static_cast<std::int64_t>(rng.bounded(
            static_cast<std::uint64_t>(Graph::max_edges(n)) + 1));
        population.push_back(random_graph(n, m, rng.next()));
    }

    std::size_t trees = 0;
    for (const Graph& g : population) {
        const int n = g.vertex_count();
        const int alpha = alpha_by_enumeration(g).alpha;
        const auto maximal = canonical(enumerate_maximal_sets(g));
        for (auto mode : {OrderingMode::Arbitrary, OrderingMode::AscendingDegree,
                          OrderingMode::DescendingDegree}) {
            const SbeTree tree = build_full_tree(g, degree_ordering(g, mode), EdgeRule::LexFirst);
            ++trees;
            std::unordered_map<VertexSet, int, VertexSetHash> content_depth;
            std::vector<VertexSet> leaves;
            int first_independent_depth = -1;
            for (const auto& node : tree.nodes) {
                if (node.content.count() != n - node.depth)
                    return {false, "node cardinality != n - depth"};
                const auto [it, fresh] = content_depth.try_emplace(node.content, node.depth);
                if (!fresh && it->second != node.depth)
                    return {false, "equal contents at different depths"};
                if (node.leaf()) {
                    if (!is_independent(g, node.content))
                        return {false, "leaf is not independent"};
                    leaves.push_back(node.content);
                }
                if (is_independent(g, node.content) &&
                    (first_independent_depth < 0 || node.depth < first_independent_depth))
                    first_independent_depth = node.depth;
            }
            if (first_independent_depth != n - alpha)
                return {false, "first independent layer depth != n - alpha"};
            const auto widths = tree.layer_widths();
            for (int l = 0; l < n - alpha; ++l)
                if (widths[static_cast<std::size_t>(l)] != (std::size_t{1} << l))
                    return {false, "layer width != 2^l above the maximum-IS layer"};
            const auto leaf_set = canonical(std::move(leaves));
            for (const VertexSet& ms : maximal)
                if (!std::binary_search(leaf_set.begin(), leaf_set.end(), ms, canonical_less))
                    return {false, "a maximal independent set is missing from the leaves"};
        }
    }
    return {true, std::to_string(population.size()) + " graphs x 3 orderings, " +
                      std::to_string(trees) + " trees"};
}

CheckOutcome check_lbl_vs_enumeration(VerifyLevel level) {
    const int reps = level == VerifyLevel::Quick ? 40 : 120;
    SplitMix64 rng(333);
    const int max_n = level == VerifyLevel::Quick ? 12 : 16;
    for (int i = 0; i < reps; ++i) {
        const int n = 4 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(max_n - 3)));
        const std::int64_t m = static_cast<std::int64_t>(rng.bounded(
            static_cast<std::uint64_t>(Graph::max_edges(n)) + 1));
        const std::uint64_t seed = rng.next();
        const Graph g = random_graph(n, m, seed);
        const EnumerationResult truth = alpha_by_enumeration(g);
        for (auto mode : {OrderingMode::Arbitrary, OrderingMode::AscendingDegree,
                          OrderingMode::DescendingDegree}) {
            const LblResult got = lbl_search(g, degree_ordering(g, mode), EdgeRule::LexFirst);
            if (got.alpha != truth.alpha)
                return {false, "alpha mismatch, " + describe(g, seed)};
            if (got.depth != n - truth.alpha)
                return {false, "stopping depth != n - alpha, " + describe(g, seed)};
            if (canonical(got.maximum_sets) != truth.maximum_sets)
                return {false, "maximum-set list mismatch, " + describe(g, seed)};
        }
    }
    return {true, std::to_string(reps) + " graphs x 3 orderings"};
}

CheckOutcome check_dfs_laws(VerifyLevel level) {
    const int reps = level == VerifyLevel::Quick ? 60 : 200;
    SplitMix64 rng(777);
    const auto variants = all_variants();
    for (int i = 0; i < reps; ++i) {
        const int n = 1 + static_cast<int>(rng.bounded(16));
        const std::int64_t m = static_cast<std::int64_t>(rng.bounded(
            static_cast<std::uint64_t>(Graph::max_edges(n)) + 1));
        const std::uint64_t seed = rng.next();
        const Graph g = random_graph(n, m, seed);
        const int alpha = alpha_by_enumeration(g).alpha;
        for (const SearchConfig& cfg : variants) {
            const SearchResult res = dfs_descend(g, cfg, alpha, /*record_path=*/true);
            if (!is_independent(g, res.found))
                return {false, "descent returned a dependent set, " + describe(g, seed)};
            if (res.size > alpha) return {false, "descent beat alpha?!, " + describe(g, seed)};
            if (res.depth != n - res.size || res.size != res.found.count())
                return {false, "size/depth bookkeeping broken, " + describe(g, seed)};
            if (res.success.value() != (res.size == alpha))
                return {false, "success flag wrong, " + describe(g, seed)};
            const SearchResult again = dfs_descend(g, cfg, alpha, /*record_path=*/true);
            if (again.found != res.found || again.path != res.path)
                return {false, "descent is not deterministic, " + describe(g, seed)};
        }
    }
    // boundary densities always succeed
    for (int n : {5, 9}) {
        for (std::int64_t m : {std::int64_t{0}, Graph::max_edges(n)}) {
            const Graph g = random_graph(n, m, 5);
            const int alpha = alpha_by_enumeration(g).alpha;
            for (const SearchConfig& cfg : variants)
                if (!dfs_descend(g, cfg, alpha).success.value())
                    return {false, "boundary density descent failed at n=" + std::to_string(n) +
                                       " m=" + std::to_string(m)};
        }
    }
    return {true, std::to_string(reps) + " graphs x 9 variants"};
}

CheckOutcome check_bnb_vs_enumeration(VerifyLevel level) {
    const int reps = level == VerifyLevel::Quick ? 150 : 500;
    SplitMix64 rng(31337);
    for (int i = 0; i < reps; ++i) {
        const int n = 4 + static_cast<int>(rng.bounded(13));
        // sweep the full density range as i advances
        const std::int64_t all = Graph::max_edges(n);
        const std::int64_t m = all * (i % 11) / 10;
        const std::uint64_t seed = rng.next();
        const Graph g = random_graph(n, m, seed);
        const OracleResult got = alpha_exact(g);
        const int want = alpha_by_enumeration(g).alpha;
        if (got.alpha != want) return {false, "alpha mismatch, " + describe(g, seed)};
        if (!is_independent(g, got.witness) || got.witness.count() != got.alpha)
            return {false, "witness invalid, " + describe(g, seed)};
        if (i % 10 == 0) {
            // relabeling invariance
            std::vector<int> relabel(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) relabel[static_cast<std::size_t>(v)] = v;
            for (int v = n - 1; v > 0; --v)
                std::swap(relabel[static_cast<std::size_t>(v)],
                          relabel[static_cast<std::size_t>(
                              rng.bounded(static_cast<std::uint64_t>(v) + 1))]);
            std::vector<std::pair<int, int>> mapped;
            for (auto [u, v] : g.edges())
                mapped.emplace_back(relabel[static_cast<std::size_t>(u)],
                                    relabel[static_cast<std::size_t>(v)]);
            if (alpha_exact(Graph(n, mapped)).alpha != want)
                return {false, "alpha changed under relabeling, " + describe(g, seed)};
        }
    }
    return {true, std::to_string(reps) + " graphs"};
}

CheckOutcome check_sweep_determinism(VerifyLevel level) {
    SweepConfig cfg;
    cfg.n = 8;
    cfg.m_values = {0, 7, 14, 21, 28};
    cfg.graphs_per_m = level == VerifyLevel::Quick ? 25 : 60;
    cfg.variants = {{OrderingMode::AscendingDegree, BranchPolicy::MostStable, EdgeRule::LexFirst},
                    {OrderingMode::DescendingDegree, BranchPolicy::AlwaysLeft, EdgeRule::LexFirst},
                    {OrderingMode::Arbitrary, BranchPolicy::FewestEdges, EdgeRule::LexFirst}};
    cfg.master_seed = 99;
    cfg.thread_count = 1;
    const auto rows1 = run_sweep(cfg);
    cfg.thread_count = 2;
    const auto rows2 = run_sweep(cfg);
    if (emit_csv(rows1) != emit_csv(rows2))
        return {false, "CSV differs between thread counts"};
    for (const SweepRow& row : rows1) {
        if (row.m == 0 || row.m == Graph::max_edges(cfg.n)) {
            if (row.successes != row.trials || row.mean_accuracy != 1.0)
                return {false, "boundary density row is not all-success"};
        }
        const double floor_mean =
            row.success_rate + (1.0 - row.success_rate) / cfg.n;
        if (row.mean_accuracy + 1e-12 < floor_mean)
            return {false, "mean accuracy below its lower bound"};
        if (row.min_accuracy > row.mean_accuracy + 1e-12 || row.mean_accuracy > 1.0 + 1e-12)
            return {false, "accuracy ordering violated"};
    }
    // paired trials: regenerating a trial graph reproduces it bit-exactly
    for (std::int64_t m : cfg.m_values) {
        const std::uint64_t seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(m), 0);
        if (random_graph(cfg.n, m, seed).hash() != random_graph(cfg.n, m, seed).hash())
            return {false, "trial graph regeneration differs"};
    }
    return {true, std::to_string(rows1.size()) + " rows, threads 1 vs 2"};
}

} // namespace

VerifyReport run_verification(VerifyLevel level, std::ostream& log) {
    using Check = CheckOutcome (*)(VerifyLevel);
    const std::pair<const char*, Check> checks[] = {
        {"graph-invariants", check_graph_invariants},
        {"graph-uniformity", check_uniformity},
        {"degree-orderings", check_degree_orderings},
        {"induced-counts", check_induced_counts},
        {"stability-bounds", check_stability_bounds},
        {"split-laws", check_split_laws},
        {"full-tree-laws", check_full_tree_laws},
        {"lbl-vs-enumeration", check_lbl_vs_enumeration},
        {"dfs-laws", check_dfs_laws},
        {"bnb-vs-enumeration", check_bnb_vs_enumeration},
        {"sweep-determinism", check_sweep_determinism},
    };

    VerifyReport report;
    for (const auto& [name, fn] : checks) {
        CheckOutcome outcome;
        try {
            outcome = fn(level);
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (outcome.ok) {
            ++report.passed;
            log << "ok   " << name;
            if (!outcome.detail.empty()) log << " (" << outcome.detail << ")";
            log << "\n";
        } else {
            ++report.failed;
            report.failures.push_back(std::string(name) + ": " + outcome.detail);
            log << "FAIL " << name << " (" << outcome.detail << ")\n";
        }
    }
    return report;
}

} // namespace sbe
