#ifndef SBE_GRAPH_HPP
#define SBE_GRAPH_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

namespace sbe {

// Subset of the vertices 0..universe-1 of a graph, with fixed-width bitset
// semantics. Sets over at most 64 vertices live in a single inline word, so
// copying them never touches the heap.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : universe_(universe) {
        assert(universe >= 0);
        if (universe > 64) rest_.assign(static_cast<std::size_t>(word_count() - 1), 0);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int i = 0; i < s.word_count(); ++i) s.word_ref(i) = ~0ULL;
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.add(v);
        return s;
    }

    int universe() const { return universe_; }

    int count() const {
        int c = std::popcount(word0_);
        for (std::uint64_t w : rest_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        if (word0_) return false;
        for (std::uint64_t w : rest_)
            if (w) return false;
        return true;
    }

    bool contains(int v) const {
        assert(v >= 0 && v < universe_);
        return (word(v >> 6) >> (v & 63)) & 1u;
    }

    void add(int v) {
        assert(v >= 0 && v < universe_);
        word_ref(v >> 6) |= 1ULL << (v & 63);
    }

    void remove(int v) {
        assert(v >= 0 && v < universe_);
        word_ref(v >> 6) &= ~(1ULL << (v & 63));
    }

    VertexSet without(int v) const {
        VertexSet s = *this;
        s.remove(v);
        return s;
    }

    bool intersects(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        if (word0_ & o.word0_) return true;
        for (std::size_t i = 0; i < rest_.size(); ++i)
            if (rest_[i] & o.rest_[i]) return true;
        return false;
    }

    int intersect_count(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        int c = std::popcount(word0_ & o.word0_);
        for (std::size_t i = 0; i < rest_.size(); ++i)
            c += std::popcount(rest_[i] & o.rest_[i]);
        return c;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        if (word0_ & ~o.word0_) return false;
        for (std::size_t i = 0; i < rest_.size(); ++i)
            if (rest_[i] & ~o.rest_[i]) return false;
        return true;
    }

    VertexSet operator&(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        VertexSet s(universe_);
        s.word0_ = word0_ & o.word0_;
        for (std::size_t i = 0; i < rest_.size(); ++i) s.rest_[i] = rest_[i] & o.rest_[i];
        return s;
    }

    VertexSet operator|(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        VertexSet s(universe_);
        s.word0_ = word0_ | o.word0_;
        for (std::size_t i = 0; i < rest_.size(); ++i) s.rest_[i] = rest_[i] | o.rest_[i];
        return s;
    }

    // Set difference: members of *this that are not in o.
    VertexSet minus(const VertexSet& o) const {
        assert(universe_ == o.universe_);
        VertexSet s(universe_);
        s.word0_ = word0_ & ~o.word0_;
        for (std::size_t i = 0; i < rest_.size(); ++i) s.rest_[i] = rest_[i] & ~o.rest_[i];
        return s;
    }

    bool operator==(const VertexSet&) const = default;

    // Smallest member, or -1 when empty.
    int first() const {
        int v = next_member(-1);
        return v == universe_ ? -1 : v;
    }

    // Smallest member strictly greater than `after`; universe() when none.
    int next_member(int after) const {
        int start = after + 1;
        if (start >= universe_) return universe_;
        int wi = start >> 6;
        std::uint64_t w = word(wi) & (~0ULL << (start & 63));
        for (;;) {
            if (w) return (wi << 6) + std::countr_zero(w);
            if (++wi >= word_count()) return universe_;
            w = word(wi);
        }
    }

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        const_iterator() = default;
        int operator*() const { return cur_; }
        const_iterator& operator++() {
            cur_ = set_->next_member(cur_);
            return *this;
        }
        const_iterator operator++(int) {
            const_iterator t = *this;
            ++*this;
            return t;
        }
        friend bool operator==(const const_iterator&, const const_iterator&) = default;

    private:
        friend class VertexSet;
        const_iterator(const VertexSet* s, int cur) : set_(s), cur_(cur) {}
        const VertexSet* set_ = nullptr;
        int cur_ = 0;
    };

    const_iterator begin() const { return {this, next_member(-1)}; }
    const_iterator end() const { return {this, universe_}; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    std::string to_string() const {
        std::string out = "{";
        const char* sep = "";
        for (int v : *this) {
            out += sep;
            out += std::to_string(v);
            sep = ",";
        }
        return out + "}";
    }

    // Bits 0..min(universe,64)-1 as one machine word; handy for mask-based
    // algorithms on small graphs.
    std::uint64_t low_word() const { return word0_; }

    std::uint64_t hash() const;

private:
    int word_count() const { return universe_ == 0 ? 0 : ((universe_ + 63) >> 6); }
    std::uint64_t word(int i) const { return i == 0 ? word0_ : rest_[static_cast<std::size_t>(i - 1)]; }
    std::uint64_t& word_ref(int i) { return i == 0 ? word0_ : rest_[static_cast<std::size_t>(i - 1)]; }

    void trim() {
        if (universe_ > 0 && (universe_ & 63) != 0)
            word_ref(word_count() - 1) &= (1ULL << (universe_ & 63)) - 1;
    }

    int universe_ = 0;
    std::uint64_t word0_ = 0;
    std::vector<std::uint64_t> rest_; // words 1.. when universe > 64

    friend bool canonical_less(const VertexSet&, const VertexSet&);
};

// Canonical set order: by cardinality, then by bit pattern read as an
// unsigned integer (most significant word first).
bool canonical_less(const VertexSet& a, const VertexSet& b);

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return static_cast<std::size_t>(s.hash()); }
};

enum class OrderingMode { Arbitrary, AscendingDegree, DescendingDegree };

// A vertex ordering together with its inverse.
struct Permutation {
    std::vector<int> order; // order[i] = vertex placed at position i
    std::vector<int> rank;  // rank[v]  = position of vertex v

    static Permutation identity(int n);
    int size() const { return static_cast<int>(order.size()); }
};

// Undirected simple graph on vertices 0..n-1, immutable after construction.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }
    const VertexSet& neighbors(int v) const {
        assert(v >= 0 && v < n_);
        return adj_[static_cast<std::size_t>(v)];
    }
    int degree(int v) const { return neighbors(v).count(); }
    bool has_edge(int u, int v) const { return neighbors(u).contains(v); }
    VertexSet vertices() const { return VertexSet::full(n_); }

    // Edge list in ascending lexicographic order with u < v.
    std::vector<std::pair<int, int>> edges() const;

    std::uint64_t hash() const;

    bool operator==(const Graph&) const = default;

    static std::int64_t max_edges(int n) { return static_cast<std::int64_t>(n) * (n - 1) / 2; }

private:
    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<VertexSet> adj_;
};

// Uniform G(n,m): exactly m distinct edges sampled without replacement from
// the n(n-1)/2 possible ones. Same (n, m, seed) gives the same graph on
// every platform.
Graph random_graph(int n, std::int64_t m, std::uint64_t seed);

// Vertex permutation by degree. Ties break by ascending vertex index;
// Arbitrary is the identity labeling.
Permutation degree_ordering(const Graph& g, OrderingMode mode);

// True iff no edge of g has both endpoints in s.
bool is_independent(const Graph& g, const VertexSet& s);

// Number of edges of g with both endpoints in s.
std::int64_t induced_edge_count(const Graph& g, const VertexSet& s);

// Degree of v inside the subgraph induced by s; v must be a member of s.
int induced_degree(const Graph& g, const VertexSet& s, int v);

const char* ordering_name(OrderingMode mode);

} // namespace sbe

#endif
