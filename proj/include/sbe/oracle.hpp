#ifndef SBE_ORACLE_HPP
#define SBE_ORACLE_HPP

#include "sbe/graph.hpp"

#include <cstdint>
#include <vector>

namespace sbe {

// Ground truth for success/accuracy statistics, implemented without any of
// the split-tree machinery so the two can check each other.

struct OracleResult {
    int alpha = 0;
    VertexSet witness;                  // one maximum independent set
    std::uint64_t node_budget_used = 0; // branch-and-bound nodes, informational
};

// Exact independence number by branch and bound: branch on a max-degree
// vertex (exclude it, or take it and delete its closed neighborhood), prune
// with a greedy clique-cover bound. Practical up to about 64 vertices.
OracleResult alpha_exact(const Graph& g);

inline constexpr int kEnumerationCap = 20;
inline constexpr int kMaximalEnumerationCap = 16;

struct EnumerationResult {
    int alpha = 0;
    std::vector<VertexSet> maximum_sets; // all of them, canonical order
};

// Full 2^n subset scan; the independent cross-check for alpha_exact and
// lbl_search. Capped at kEnumerationCap vertices.
EnumerationResult alpha_by_enumeration(const Graph& g);

// Exactly the maximal independent sets, duplicate-free, sorted canonically
// (cardinality, then bit pattern). Capped at kMaximalEnumerationCap.
std::vector<VertexSet> enumerate_maximal_sets(const Graph& g);

} // namespace sbe

#endif
