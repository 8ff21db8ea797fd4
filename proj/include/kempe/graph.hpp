#pragma once

// Small simple graphs (at most 64 vertices) stored as one adjacency word per
// vertex, plus the graph6 codec and the combinators used to build the
// counterexample graphs.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kempe/coloring.hpp"

namespace kempe {

using Vertex = int;
using VertexSet = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet singleton(Vertex v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet s, Vertex v) { return (s >> v) & 1U; }
constexpr int set_size(VertexSet s) { return std::popcount(s); }
constexpr Vertex lowest(VertexSet s) { return std::countr_zero(s); }
constexpr VertexSet first_n(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

/// Calls fn(v) for every vertex of s in increasing order.
template <class Fn> void for_each_vertex(VertexSet s, Fn&& fn)
{
    while (s != 0) {
        fn(lowest(s));
        s &= s - 1;
    }
}

class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices. Throws InputError if n is outside [0, 64].
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<Edge>& edges);
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);

    int order() const { return n_; }
    int size() const; ///< edge count
    VertexSet vertices() const { return first_n(n_); }
    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return set_size(adj_[v]); }
    bool adjacent(Vertex u, Vertex v) const { return contains(adj_[u], v); }
    int min_degree() const;
    int max_degree() const;

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    /// Edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

enum class Side : std::uint8_t { S, T };

/// A graph viewed as a bipartite graph plus the edges lying inside a part.
struct AlmostBipartiteView {
    Graph graph;
    std::vector<Side> side;
    std::vector<Edge> extra_edges; ///< within-side edges, sorted
    int ell = 0;

    VertexSet side_set(Side s) const;
};

/// graph6 codec. Only the undirected simple-graph flavour is accepted; an
/// optional ">>graph6<<" header and a trailing CR are tolerated.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

Graph complement(const Graph& g);

/// K_m x K_n (categorical product). Vertex (i, j), 1-based, sits at index
/// (i-1)*n + (j-1); (i1,j1) ~ (i2,j2) iff i1 != i2 and j1 != j2.
Graph categorical_product_complete(int m, int n);

/// Induced subgraph on the vertices not in `drop`; survivors keep their
/// relative order.
Graph delete_vertices(const Graph& g, VertexSet drop);

/// Disjoint union plus every edge between the parts. g1 occupies indices
/// 0..n1-1 and g2 occupies n1..n1+n2-1.
Graph join(const Graph& g1, const Graph& g2);

/// A proper coloring with colors in 1..k, or nothing if none exists.
std::optional<Coloring> is_k_colorable(const Graph& g, int k);
int chromatic_number(const Graph& g);

/// Size of a maximal clique found greedily from every start vertex.
int clique_lower_bound(const Graph& g);
/// Number of colors used by largest-degree-first greedy coloring.
int greedy_upper_bound(const Graph& g);

/// BFS 2-coloring from the lowest-index vertex of each component, which is
/// placed on side S.
std::optional<std::vector<Side>> bipartition_of(const Graph& g);

AlmostBipartiteView view_as_almost_bipartite(const Graph& g, const std::vector<Side>& side);

} // namespace kempe
