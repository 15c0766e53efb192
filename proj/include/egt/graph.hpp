#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Immutable simple undirected graphs on 1..64 vertices, one 64-bit adjacency
// row per vertex.  All structural operations are pure functions that return
// new graphs; operations that relabel vertices also return the mapping back
// to the original labels.

namespace egt {

inline constexpr int kMaxVertices = 64;

using VertexSet = std::uint64_t; // bit i set <=> vertex i in the set

struct Edge {
    int u = 0, v = 0; // normalized u < v
    friend bool operator==(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

class Graph {
  public:
    // Edgeless graph on n vertices.
    explicit Graph(int n);
    // Graph on n vertices with the given edges.  Throws std::invalid_argument
    // on out-of-range order, out-of-range endpoints, loops, or duplicates.
    Graph(int n, const EdgeList& edges);

    // Circulant graph: i ~ j iff (j - i) mod n is in offsets.  Offsets must be
    // nonempty and lie in 1..n-1; n >= 3.  The offset set is implicitly closed
    // under k -> n - k.
    static Graph circulant(int n, const std::vector<int>& offsets);

    int order() const { return n_; }
    int size() const { return m_; }

    VertexSet neighbors(int v) const { return adj_[v]; }
    VertexSet closed_neighborhood(int v) const { return adj_[v] | vertex_bit(v); }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    int degree(int v) const;

    // All vertices as a set: bits 0..n-1.
    VertexSet vertex_mask() const;

    EdgeList edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;

    void add_edge_unchecked(int u, int v);
};

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> degrees; // indexed by vertex
};

// A graph obtained from another one by relabeling vertices to 0..k-1.
// vertex_map[new_label] = original label.
struct Subgraph {
    Graph graph;
    std::vector<int> vertex_map;
};

Graph complement(const Graph& g);

// Connected components, each relabeled contiguously; ordered by smallest
// original vertex.
std::vector<Subgraph> components(const Graph& g);

bool is_connected(const Graph& g);

// Bitset test: some edge uv with neighbors(u) & neighbors(v) nonempty.
bool is_triangle_free(const Graph& g);

DegreeStats degree_stats(const Graph& g);

// Cut edges, found by one DFS low-link pass; normalized u < v, sorted.
EdgeList bridges(const Graph& g);

// Remove the vertices in `s`; remaining vertices are relabeled contiguously
// in increasing original order.  Throws std::invalid_argument if `s` is not a
// proper subset of the vertex set.
Subgraph delete_vertices(const Graph& g, VertexSet s);

// Induced subgraph on `s` (complement-set wrapper around delete_vertices).
Subgraph induced_subgraph(const Graph& g, VertexSet s);

} // namespace egt
