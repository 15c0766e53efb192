#include "egt/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace egt {

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in 1.." + std::to_string(kMaxVertices) +
                                    ", got " + std::to_string(n));
}

// Bits of x strictly above position v; shift-safe for v = 63.
VertexSet bits_above(VertexSet x, int v) {
    return v + 1 >= kMaxVertices ? 0 : x >> (v + 1);
}

} // namespace

Graph::Graph(int n) : n_(n), m_(0) {
    check_order(n);
    adj_.assign(static_cast<size_t>(n), 0);
}

Graph::Graph(int n, const EdgeList& edges) : Graph(n) {
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("loops are not allowed");
        if (adjacent(e.u, e.v))
            throw std::invalid_argument("duplicate edge");
        add_edge_unchecked(e.u, e.v);
    }
}

void Graph::add_edge_unchecked(int u, int v) {
    adj_[u] |= vertex_bit(v);
    adj_[v] |= vertex_bit(u);
    ++m_;
}

Graph Graph::circulant(int n, const std::vector<int>& offsets) {
    if (n < 3)
        throw std::invalid_argument("circulant requires order >= 3");
    check_order(n);
    if (offsets.empty())
        throw std::invalid_argument("circulant requires a nonempty offset set");
    std::vector<bool> step(static_cast<size_t>(n), false);
    for (int k : offsets) {
        if (k < 1 || k > n - 1)
            throw std::invalid_argument("circulant offset out of range 1..n-1");
        step[static_cast<size_t>(k)] = true;
        step[static_cast<size_t>(n - k)] = true; // i ~ j is symmetric
    }
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (step[static_cast<size_t>(j - i)])
                g.add_edge_unchecked(i, j);
    return g;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

VertexSet Graph::vertex_mask() const {
    return n_ == kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
}

EdgeList Graph::edges() const {
    EdgeList out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        VertexSet higher = u + 1 >= kMaxVertices ? 0 : adj_[u] >> (u + 1);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            out.push_back({u, v});
            higher &= higher - 1;
        }
    }
    return out;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph out(n);
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                edges.push_back({u, v});
    return Graph(n, edges);
}

namespace {

VertexSet component_of(const Graph& g, int start, VertexSet allowed) {
    VertexSet comp = vertex_bit(start);
    VertexSet frontier = comp;
    while (frontier) {
        VertexSet next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v) & allowed & ~comp;
        }
        comp |= next;
        frontier = next;
    }
    return comp;
}

} // namespace

std::vector<Subgraph> components(const Graph& g) {
    std::vector<Subgraph> out;
    VertexSet remaining = g.vertex_mask();
    while (remaining) {
        int start = std::countr_zero(remaining);
        VertexSet comp = component_of(g, start, remaining);
        remaining &= ~comp;
        out.push_back(induced_subgraph(g, comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return component_of(g, 0, g.vertex_mask()) == g.vertex_mask();
}

bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        VertexSet higher = bits_above(g.neighbors(u), u);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            higher &= higher - 1;
            if (g.neighbors(u) & g.neighbors(v))
                return false;
        }
    }
    return true;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    s.degrees.resize(static_cast<size_t>(g.order()));
    s.min_degree = kMaxVertices + 1;
    s.max_degree = 0;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        s.degrees[static_cast<size_t>(v)] = d;
        s.min_degree = std::min(s.min_degree, d);
        s.max_degree = std::max(s.max_degree, d);
    }
    return s;
}

namespace {

struct BridgeDfs {
    const Graph& g;
    std::vector<int> disc, low;
    int timer = 0;
    EdgeList found;

    explicit BridgeDfs(const Graph& graph)
        : g(graph),
          disc(static_cast<size_t>(graph.order()), -1),
          low(static_cast<size_t>(graph.order()), 0) {}

    void run(int v, int parent) {
        disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
        bool parent_skipped = false; // one parent edge only (simple graph)
        VertexSet nbrs = g.neighbors(v);
        while (nbrs) {
            int to = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            if (to == parent && !parent_skipped) {
                parent_skipped = true;
                continue;
            }
            if (disc[static_cast<size_t>(to)] >= 0) {
                low[static_cast<size_t>(v)] =
                    std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(to)]);
            } else {
                run(to, v);
                low[static_cast<size_t>(v)] =
                    std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(to)]);
                if (low[static_cast<size_t>(to)] > disc[static_cast<size_t>(v)])
                    found.push_back({std::min(v, to), std::max(v, to)});
            }
        }
    }
};

} // namespace

EdgeList bridges(const Graph& g) {
    BridgeDfs dfs(g);
    for (int v = 0; v < g.order(); ++v)
        if (dfs.disc[static_cast<size_t>(v)] < 0)
            dfs.run(v, -1);
    std::sort(dfs.found.begin(), dfs.found.end(),
              [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    return dfs.found;
}

Subgraph delete_vertices(const Graph& g, VertexSet s) {
    if (s & ~g.vertex_mask())
        throw std::invalid_argument("delete_vertices: set contains out-of-range vertices");
    if (s == g.vertex_mask())
        throw std::invalid_argument("delete_vertices: cannot delete every vertex");
    VertexSet keep = g.vertex_mask() & ~s;
    std::vector<int> map;
    map.reserve(static_cast<size_t>(std::popcount(keep)));
    std::vector<int> new_label(static_cast<size_t>(g.order()), -1);
    VertexSet it = keep;
    while (it) {
        int v = std::countr_zero(it);
        it &= it - 1;
        new_label[static_cast<size_t>(v)] = static_cast<int>(map.size());
        map.push_back(v);
    }
    EdgeList edges;
    for (int u : map) {
        VertexSet higher = bits_above(g.neighbors(u) & keep, u);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            higher &= higher - 1;
            edges.push_back({new_label[static_cast<size_t>(u)], new_label[static_cast<size_t>(v)]});
        }
    }
    return Subgraph{Graph(static_cast<int>(map.size()), edges), std::move(map)};
}

Subgraph induced_subgraph(const Graph& g, VertexSet s) {
    if (!s)
        throw std::invalid_argument("induced_subgraph: empty vertex set");
    return delete_vertices(g, g.vertex_mask() & ~s);
}

} // namespace egt
