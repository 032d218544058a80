#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sbe/dimacs.hpp"
#include "sbe/graph.hpp"
#include "sbe/rng.hpp"
#include "test_util.hpp"

#include <map>
#include <sstream>

using namespace sbe;
using namespace sbe::test;

TEST_CASE("vertex set basics") {
    VertexSet s(10);
    CHECK(s.empty());
    CHECK(s.count() == 0);
    s.add(3);
    s.add(7);
    s.add(0);
    CHECK(s.count() == 3);
    CHECK(s.contains(3));
    CHECK(!s.contains(4));
    CHECK(s.to_vector() == std::vector<int>{0, 3, 7});
    s.remove(3);
    CHECK(s.to_vector() == std::vector<int>{0, 7});
    CHECK(s.without(0).to_vector() == std::vector<int>{7});
    CHECK(s.count() == 2);

    const VertexSet full = VertexSet::full(10);
    CHECK(full.count() == 10);
    CHECK(s.is_subset_of(full));
    CHECK(!full.is_subset_of(s));
    CHECK((full.minus(s)).count() == 8);
    CHECK(s.first() == 0);
    CHECK(VertexSet(4).first() == -1);
}

TEST_CASE("vertex set across the word boundary") {
    VertexSet s(130);
    for (int v : {0, 63, 64, 127, 129}) s.add(v);
    CHECK(s.count() == 5);
    CHECK(s.to_vector() == std::vector<int>{0, 63, 64, 127, 129});
    VertexSet t(130);
    t.add(64);
    CHECK(s.intersects(t));
    CHECK(s.intersect_count(t) == 1);
    CHECK(t.is_subset_of(s));
    CHECK(VertexSet::full(130).count() == 130);
    CHECK((s & t).to_vector() == std::vector<int>{64});
    CHECK(s.minus(t).count() == 4);
}

TEST_CASE("canonical order sorts by cardinality then bit pattern") {
    const Graph g = edgeless_graph(6);
    const VertexSet a = vs(g, {5});
    const VertexSet b = vs(g, {0, 1});
    const VertexSet c = vs(g, {0, 2});
    CHECK(canonical_less(a, b)); // smaller cardinality first
    CHECK(canonical_less(b, c)); // 0b000011 < 0b000101
    CHECK(!canonical_less(c, b));
    CHECK(!canonical_less(a, a));
}

TEST_CASE("random_graph fixed points") {
    const Graph empty4 = random_graph(4, 0, 99);
    CHECK(empty4.edge_count() == 0);
    CHECK(empty4.vertex_count() == 4);

    const Graph k4 = random_graph(4, 6, 123);
    CHECK(k4 == complete_graph(4));

    const Graph a = random_graph(24, 100, 777);
    const Graph b = random_graph(24, 100, 777);
    CHECK(a.edges() == b.edges());
    CHECK(a.edge_count() == 100);
}

TEST_CASE("random_graph rejects out-of-range arguments") {
    CHECK_THROWS_AS(random_graph(0, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(random_graph(4, 7, 1), std::out_of_range);
    CHECK_THROWS_AS(random_graph(4, -1, 1), std::out_of_range);
}

TEST_CASE("random_graph invariants over a density grid") {
    for (int n : {1, 2, 5, 13, 40, 70}) {
        const std::int64_t all = Graph::max_edges(n);
        for (std::int64_t m : {std::int64_t{0}, all / 3, all}) {
            const Graph g = random_graph(n, m, 42 + static_cast<std::uint64_t>(n));
            CHECK(g.edge_count() == m);
            std::int64_t degree_sum = 0;
            for (int v = 0; v < n; ++v) {
                CHECK(!g.neighbors(v).contains(v));
                degree_sum += g.degree(v);
                for (int u : g.neighbors(v)) CHECK(g.has_edge(u, v));
            }
            CHECK(degree_sum == 2 * m);
        }
    }
}

TEST_CASE("random_graph samples 3-edge graphs on 5 vertices uniformly") {
    const int draws = 20000;
    std::map<std::uint64_t, int> freq;
    for (int i = 0; i < draws; ++i)
        freq[random_graph(5, 3, static_cast<std::uint64_t>(i)).hash()] += 1;
    CHECK(freq.size() == 120); // C(10,3)
    const double expect = 1.0 / 120.0;
    for (const auto& [key, count] : freq) {
        const double f = static_cast<double>(count) / draws;
        CHECK(f > expect - 0.01);
        CHECK(f < expect + 0.01);
    }
}

TEST_CASE("degree_ordering examples") {
    const Graph star = star_graph(4);
    CHECK(degree_ordering(star, OrderingMode::DescendingDegree).order ==
          std::vector<int>{0, 1, 2, 3});

    const Graph empty = edgeless_graph(5);
    for (auto mode : {OrderingMode::Arbitrary, OrderingMode::AscendingDegree,
                      OrderingMode::DescendingDegree})
        CHECK(degree_ordering(empty, mode).order == std::vector<int>{0, 1, 2, 3, 4});

    const Graph p3 = path_graph(3); // degrees 1,2,1
    CHECK(degree_ordering(p3, OrderingMode::DescendingDegree).order ==
          std::vector<int>{1, 0, 2});
    CHECK(degree_ordering(p3, OrderingMode::AscendingDegree).order ==
          std::vector<int>{0, 2, 1});
}

TEST_CASE("degree_ordering is a bijection with inverse rank") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Graph g = random_graph(11, 20, seed);
        for (auto mode : {OrderingMode::Arbitrary, OrderingMode::AscendingDegree,
                          OrderingMode::DescendingDegree}) {
            const Permutation p = degree_ordering(g, mode);
            for (int i = 0; i < p.size(); ++i) {
                CHECK(p.rank[static_cast<std::size_t>(p.order[static_cast<std::size_t>(i)])] == i);
                CHECK(p.order[static_cast<std::size_t>(p.rank[static_cast<std::size_t>(i)])] == i);
            }
        }
    }
}

TEST_CASE("is_independent") {
    const Graph k2 = complete_graph(2);
    CHECK(is_independent(k2, VertexSet(2)));
    CHECK(!is_independent(k2, VertexSet::full(2)));

    const Graph c5 = cycle_graph(5);
    CHECK(is_independent(c5, vs(c5, {0, 2})));
    CHECK(!is_independent(c5, vs(c5, {0, 1})));
}

TEST_CASE("induced counts") {
    const Graph k4 = complete_graph(4);
    CHECK(induced_edge_count(k4, k4.vertices()) == 6);
    CHECK(induced_edge_count(k4, VertexSet(4)) == 0);

    const Graph p3 = path_graph(3);
    CHECK(induced_edge_count(p3, p3.vertices()) == 2);
    CHECK(induced_degree(p3, vs(p3, {0, 1}), 1) == 1);
    CHECK(induced_degree(p3, p3.vertices(), 1) == 2);
    CHECK(induced_degree(complete_graph(3), VertexSet::full(3), 2) == 2);
    CHECK(induced_degree(edgeless_graph(3), VertexSet::full(3), 1) == 0);
    CHECK_THROWS_AS(induced_degree(p3, vs(p3, {0, 1}), 2), std::invalid_argument);
}

TEST_CASE("handshake identity on random subsets") {
    SplitMix64 rng(5);
    for (int i = 0; i < 30; ++i) {
        const int n = 3 + static_cast<int>(rng.bounded(10));
        const auto m = static_cast<std::int64_t>(
            rng.bounded(static_cast<std::uint64_t>(Graph::max_edges(n)) + 1));
        const Graph g = random_graph(n, m, rng.next());
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (rng.next() & 1) s.add(v);
        std::int64_t twice = 0;
        for (int v : s) twice += induced_degree(g, s, v);
        CHECK(twice == 2 * induced_edge_count(g, s));
        CHECK(is_independent(g, s) == (induced_edge_count(g, s) == 0));
    }
}

TEST_CASE("graph constructor rejects bad edges") {
    CHECK_THROWS_AS(make_graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), std::out_of_range);
    CHECK_THROWS_AS(Graph(0, {}), std::out_of_range);
}

TEST_CASE("graph text format is byte-exact") {
    const Graph p3 = path_graph(3);
    CHECK(write_dimacs(p3) == "p edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(write_dimacs(edgeless_graph(1)) == "p edge 1 0\n");

    // writer emits ascending lexicographic edges whatever the input order
    const Graph scrambled = make_graph(4, {{2, 3}, {0, 3}, {1, 2}, {0, 1}});
    CHECK(write_dimacs(scrambled) == "p edge 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n");
}

TEST_CASE("graph text round-trips") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Graph g = random_graph(9, 14, seed);
        std::istringstream in(write_dimacs(g));
        CHECK(read_dimacs(in) == g);
    }
}

TEST_CASE("graph text parser accepts comments and unordered endpoints") {
    std::istringstream in("c a comment\np edge 3 2\ne 2 1\nc another\ne 3 2\n");
    const Graph g = read_dimacs(in);
    CHECK(g == path_graph(3));
}

TEST_CASE("graph text parser rejects malformed input") {
    const auto reject = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_dimacs(in), std::runtime_error);
    };
    reject("");
    reject("p edge\n");
    reject("p vertex 3 1\ne 1 2\n");
    reject("p edge 3 2\ne 1 2\n");                // missing edge
    reject("p edge 3 1\ne 1 2\ne 2 3\n");         // extra edge
    reject("p edge 3 1\ne 1 1\n");                // self loop
    reject("p edge 3 1\ne 1 4\n");                // endpoint out of range
    reject("p edge 3 2\ne 1 2\ne 2 1\n");         // duplicate
    reject("p edge 3 1\nx 1 2\n");                // bad tag
    reject("p edge 0 0\n");                       // no vertices
}

TEST_CASE("derive_seed separates nearby trials") {
    CHECK(derive_seed(1, 10, 0) != derive_seed(1, 10, 1));
    CHECK(derive_seed(1, 10, 0) != derive_seed(1, 11, 0));
    CHECK(derive_seed(1, 10, 0) != derive_seed(2, 10, 0));
    CHECK(derive_seed(7, 3, 4) == derive_seed(7, 3, 4));
}
