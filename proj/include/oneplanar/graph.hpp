#ifndef ONEPLANAR_GRAPH_HPP
#define ONEPLANAR_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oneplanar/error.hpp"

namespace onep {

// Set of vertex labels in [0, 64), stored as a bitmask.
struct VertexSet {
    std::uint64_t bits = 0;

    VertexSet() = default;
    explicit VertexSet(std::uint64_t b) : bits(b) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    bool contains(int v) const { return (bits >> v) & 1u; }
    void add(int v) { bits |= std::uint64_t{1} << v; }
    void remove(int v) { bits &= ~(std::uint64_t{1} << v); }
    int size() const { return __builtin_popcountll(bits); }
    bool empty() const { return bits == 0; }

    VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
    VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
    VertexSet operator-(VertexSet o) const { return VertexSet(bits & ~o.bits); }
    bool operator==(const VertexSet&) const = default;
    bool operator<(const VertexSet& o) const { return bits < o.bits; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint64_t b = bits; b;) {
            int v = __builtin_ctzll(b);
            out.push_back(v);
            b &= b - 1;
        }
        return out;
    }
};

// Labeled simple graph on at most 64 vertices with dense labels 0..n-1.
// Adjacency rows are bitmasks, so neighborhood operations are single words.
class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(check_size(n))) {}

    int vertex_count() const { return n_; }

    int edge_count() const {
        int total = 0;
        for (auto row : adj_) total += __builtin_popcountll(row);
        return total / 2;
    }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }

    void add_edge(int u, int v) {
        if (u == v) fail(ErrorCode::invalid_argument, "self-loop");
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }

    void remove_edge(int u, int v) {
        adj_[u] &= ~(std::uint64_t{1} << v);
        adj_[v] &= ~(std::uint64_t{1} << u);
    }

    std::uint64_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return __builtin_popcountll(adj_[v]); }

    std::uint64_t all_vertices() const {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (std::uint64_t b = adj_[u] & ~((std::uint64_t{1} << (u + 1)) - 1); b; b &= b - 1)
                out.emplace_back(u, __builtin_ctzll(b));
        return out;
    }

    bool operator==(const Graph&) const = default;

    // Induced subgraph on `verts`, relabeled densely in increasing label order.
    Graph induced(VertexSet verts) const;

    // Image of the graph under vertex permutation `perm` (vertex v becomes perm[v]).
    Graph relabeled(const std::vector<int>& perm) const;

private:
    static int check_size(int n) {
        if (n < 0 || n > max_vertices) fail(ErrorCode::size_limit, "graph size must be in [0, 64]");
        return n;
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Named constructors.
Graph complete(int k);
Graph path(int k);
Graph cycle(int k);
Graph complete_multipartite(const std::vector<int>& parts);
Graph empty_graph(int k);

// Graph operations.
Graph complement(const Graph& g);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph strong_product(const Graph& g, const Graph& h);

// Counting. Cliques include the empty clique (t = 0) and single vertices.
std::uint64_t count_cliques_size(const Graph& g, int t);
std::uint64_t count_all_cliques(const Graph& g);

// Number of (not necessarily induced) subgraphs of g isomorphic to h; |V(h)| <= 8.
std::uint64_t count_subgraphs_iso(const Graph& g, const Graph& h);

// Number of automorphisms of a small pattern graph (|V| <= 8).
std::uint64_t automorphism_count(const Graph& h);

// Connectivity and separators.
bool is_connected(const Graph& g);
bool is_connected_within(const Graph& g, std::uint64_t verts);
int component_count(const Graph& g, std::uint64_t verts);
bool is_k_connected(const Graph& g, int k);
std::vector<VertexSet> nontrivial_separators(const Graph& g, int size);
std::uint64_t count_nontrivial_separators(const Graph& g, int size);
bool is_nontrivial_separator(const Graph& g, VertexSet s);
std::vector<VertexSet> triangles_of(const Graph& g);
std::vector<VertexSet> separating_triangles(const Graph& g);

struct Separation {
    VertexSet a, b;
    int order() const { return (a & b).size(); }
    bool nontrivial() const { return !(a - b).empty() && !(b - a).empty(); }
};

} // namespace onep

#endif
