#include "egt/solvers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace egt {

namespace {

int pop(std::uint64_t x) { return std::popcount(x); }
int first(std::uint64_t x) { return std::countr_zero(x); }

// ---------------------------------------------------------------- matching

// Classic blossom algorithm: BFS forest of alternating paths, odd cycles
// contracted by rebasing vertices onto the cycle base.
struct BlossomMatcher {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> match, parent, base;
    std::vector<char> used, in_blossom;
    std::vector<int> queue;

    explicit BlossomMatcher(const Graph& g)
        : n(g.order()),
          adj(static_cast<size_t>(n)),
          match(static_cast<size_t>(n), -1),
          parent(static_cast<size_t>(n), -1),
          base(static_cast<size_t>(n)),
          used(static_cast<size_t>(n), 0),
          in_blossom(static_cast<size_t>(n), 0) {
        for (int v = 0; v < n; ++v) {
            VertexSet nbrs = g.neighbors(v);
            while (nbrs) {
                adj[static_cast<size_t>(v)].push_back(first(nbrs));
                nbrs &= nbrs - 1;
            }
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[static_cast<size_t>(v)] != b) {
            in_blossom[static_cast<size_t>(base[static_cast<size_t>(v)])] = 1;
            in_blossom[static_cast<size_t>(base[static_cast<size_t>(match[static_cast<size_t>(v)])])] = 1;
            parent[static_cast<size_t>(v)] = child;
            child = match[static_cast<size_t>(v)];
            v = parent[static_cast<size_t>(child)];
        }
    }

    int lowest_common_base(int a, int b) {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        int v = a;
        for (;;) {
            v = base[static_cast<size_t>(v)];
            seen[static_cast<size_t>(v)] = 1;
            if (match[static_cast<size_t>(v)] == -1)
                break;
            v = parent[static_cast<size_t>(match[static_cast<size_t>(v)])];
        }
        v = b;
        for (;;) {
            v = base[static_cast<size_t>(v)];
            if (seen[static_cast<size_t>(v)])
                return v;
            v = parent[static_cast<size_t>(match[static_cast<size_t>(v)])];
        }
    }

    void contract(int v, int to) {
        int b = lowest_common_base(v, to);
        std::fill(in_blossom.begin(), in_blossom.end(), 0);
        mark_path(v, b, to);
        mark_path(to, b, v);
        for (int i = 0; i < n; ++i)
            if (in_blossom[static_cast<size_t>(base[static_cast<size_t>(i)])]) {
                base[static_cast<size_t>(i)] = b;
                if (!used[static_cast<size_t>(i)]) {
                    used[static_cast<size_t>(i)] = 1;
                    queue.push_back(i);
                }
            }
    }

    bool try_augment(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[static_cast<size_t>(root)] = 1;
        queue.clear();
        queue.push_back(root);
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int to : adj[static_cast<size_t>(v)]) {
                if (base[static_cast<size_t>(v)] == base[static_cast<size_t>(to)] ||
                    match[static_cast<size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match[static_cast<size_t>(to)] != -1 &&
                     parent[static_cast<size_t>(match[static_cast<size_t>(to)])] != -1)) {
                    contract(v, to); // odd cycle through the root
                } else if (parent[static_cast<size_t>(to)] == -1) {
                    parent[static_cast<size_t>(to)] = v;
                    if (match[static_cast<size_t>(to)] == -1) {
                        for (int u = to; u != -1;) { // flip along the path
                            int pv = parent[static_cast<size_t>(u)];
                            int next = match[static_cast<size_t>(pv)];
                            match[static_cast<size_t>(u)] = pv;
                            match[static_cast<size_t>(pv)] = u;
                            u = next;
                        }
                        return true;
                    }
                    used[static_cast<size_t>(match[static_cast<size_t>(to)])] = 1;
                    queue.push_back(match[static_cast<size_t>(to)]);
                }
            }
        }
        return false;
    }

    void solve() {
        for (int v = 0; v < n; ++v) // greedy seed matching
            if (match[static_cast<size_t>(v)] == -1)
                for (int to : adj[static_cast<size_t>(v)])
                    if (match[static_cast<size_t>(to)] == -1) {
                        match[static_cast<size_t>(v)] = to;
                        match[static_cast<size_t>(to)] = v;
                        break;
                    }
        for (int v = 0; v < n; ++v)
            if (match[static_cast<size_t>(v)] == -1)
                try_augment(v);
    }
};

// ---------------------------------------------------- maximum independent set

struct MisSolver {
    int n = 0;
    std::array<std::uint64_t, kMaxVertices> adj{};
    int best = -1;
    std::uint64_t best_set = 0;

    explicit MisSolver(const Graph& g) : n(g.order()) {
        for (int v = 0; v < n; ++v)
            adj[static_cast<size_t>(v)] = g.neighbors(v);
    }

    void search(std::uint64_t cand, std::uint64_t chosen, int count) {
        // vertices isolated in the residual graph are always taken
        std::uint64_t iso = 0;
        for (std::uint64_t it = cand; it;) {
            int v = first(it);
            it &= it - 1;
            if (!(adj[static_cast<size_t>(v)] & cand))
                iso |= vertex_bit(v);
        }
        if (iso) {
            chosen |= iso;
            count += pop(iso);
            cand &= ~iso;
        }
        if (count + pop(cand) <= best)
            return;
        if (!cand) {
            best = count;
            best_set = chosen;
            return;
        }
        int branch = -1, branch_deg = -1;
        for (std::uint64_t it = cand; it;) {
            int v = first(it);
            it &= it - 1;
            int d = pop(adj[static_cast<size_t>(v)] & cand);
            if (d > branch_deg) {
                branch_deg = d;
                branch = v;
            }
        }
        std::uint64_t b = vertex_bit(branch);
        search(cand & ~(adj[static_cast<size_t>(branch)] | b), chosen | b, count + 1);
        search(cand & ~b, chosen, count);
    }

    std::uint64_t run() {
        search(n == kMaxVertices ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0, 0);
        return best_set;
    }
};

// ------------------------------------------------------------- k-coloring

// Backtracking k-colorability with a pre-colored maximum clique and the
// first-fit rule: a vertex may open at most one fresh color index.
struct KColorer {
    const Graph& g;
    int n, k;
    std::vector<int> order;
    std::vector<int> color;

    KColorer(const Graph& graph, int colors, const std::vector<int>& clique)
        : g(graph), n(graph.order()), k(colors),
          color(static_cast<size_t>(n), -1) {
        std::vector<char> in_clique(static_cast<size_t>(n), 0);
        int c = 0;
        for (int v : clique) {
            color[static_cast<size_t>(v)] = c++;
            in_clique[static_cast<size_t>(v)] = 1;
            order.push_back(v);
        }
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!in_clique[static_cast<size_t>(v)])
                rest.push_back(v);
        std::sort(rest.begin(), rest.end(), [&](int a, int b) {
            int da = g.degree(a), db = g.degree(b);
            return da != db ? da > db : a < b;
        });
        order.insert(order.end(), rest.begin(), rest.end());
    }

    bool extend(size_t pos, int used) {
        if (pos == order.size())
            return true;
        int v = order[pos];
        unsigned forbidden = 0;
        VertexSet nbrs = g.neighbors(v);
        while (nbrs) {
            int u = first(nbrs);
            nbrs &= nbrs - 1;
            if (color[static_cast<size_t>(u)] >= 0)
                forbidden |= 1u << color[static_cast<size_t>(u)];
        }
        int cap = std::min(k - 1, used);
        for (int c = 0; c <= cap; ++c) {
            if (forbidden & (1u << c))
                continue;
            color[static_cast<size_t>(v)] = c;
            if (extend(pos + 1, std::max(used, c + 1)))
                return true;
            color[static_cast<size_t>(v)] = -1;
        }
        return false;
    }

    bool run(int seeded) { return extend(static_cast<size_t>(seeded), seeded); }
};

SolveWitness color_component(const Graph& g) {
    SolveWitness w;
    w.kind = WitnessKind::Coloring;
    int n = g.order();
    if (g.size() == 0) {
        w.value = 1;
        w.colors.assign(static_cast<size_t>(n), 0);
        return w;
    }
    std::vector<int> clique = clique_number(g).vertices;
    std::sort(clique.begin(), clique.end());

    // greedy upper bound, descending degree order
    std::vector<int> greedy_order(static_cast<size_t>(n));
    std::iota(greedy_order.begin(), greedy_order.end(), 0);
    std::sort(greedy_order.begin(), greedy_order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    std::vector<int> greedy_colors(static_cast<size_t>(n), -1);
    int ub = 0;
    for (int v : greedy_order) {
        unsigned forbidden = 0;
        VertexSet nbrs = g.neighbors(v);
        while (nbrs) {
            int u = first(nbrs);
            nbrs &= nbrs - 1;
            if (greedy_colors[static_cast<size_t>(u)] >= 0)
                forbidden |= 1u << greedy_colors[static_cast<size_t>(u)];
        }
        int c = 0;
        while (forbidden & (1u << c))
            ++c;
        greedy_colors[static_cast<size_t>(v)] = c;
        ub = std::max(ub, c + 1);
    }

    for (int k = static_cast<int>(clique.size()); k < ub; ++k) {
        KColorer colorer(g, k, clique);
        if (colorer.run(static_cast<int>(clique.size()))) {
            w.value = k;
            w.colors = colorer.color;
            return w;
        }
    }
    w.value = ub;
    w.colors = greedy_colors;
    return w;
}

} // namespace

bool SolveWitness::validates(const Graph& g) const {
    int n = g.order();
    auto in_range = [n](int v) { return v >= 0 && v < n; };
    switch (kind) {
    case WitnessKind::Matching: {
        if (static_cast<int>(edges.size()) != value)
            return false;
        VertexSet covered = 0;
        for (const Edge& e : edges) {
            if (!in_range(e.u) || !in_range(e.v) || !g.adjacent(e.u, e.v))
                return false;
            VertexSet pair = vertex_bit(e.u) | vertex_bit(e.v);
            if (pop(pair) != 2 || (covered & pair))
                return false;
            covered |= pair;
        }
        return true;
    }
    case WitnessKind::IndependentSet:
    case WitnessKind::Clique: {
        if (static_cast<int>(vertices.size()) != value)
            return false;
        VertexSet set = 0;
        for (int v : vertices) {
            if (!in_range(v) || (set & vertex_bit(v)))
                return false;
            set |= vertex_bit(v);
        }
        for (int v : vertices) {
            VertexSet others = set & ~vertex_bit(v);
            VertexSet hits = g.neighbors(v) & others;
            if (kind == WitnessKind::IndependentSet ? hits != 0 : hits != others)
                return false;
        }
        return true;
    }
    case WitnessKind::Coloring: {
        if (static_cast<int>(colors.size()) != n)
            return false;
        unsigned seen = 0;
        for (int v = 0; v < n; ++v) {
            int c = colors[static_cast<size_t>(v)];
            if (c < 0 || c >= value)
                return false;
            seen |= 1u << c;
            VertexSet nbrs = g.neighbors(v);
            while (nbrs) {
                int u = first(nbrs);
                nbrs &= nbrs - 1;
                if (colors[static_cast<size_t>(u)] == c)
                    return false;
            }
        }
        return std::popcount(seen) == value;
    }
    }
    return false;
}

namespace {

void self_check(const SolveWitness& w, const Graph& g, const char* what) {
    if (!w.validates(g))
        throw std::logic_error(std::string("solver certificate failed self-check: ") + what);
}

template <typename PerComponent>
SolveWitness solve_per_component(const Graph& g, WitnessKind kind, bool additive,
                                 PerComponent per_component) {
    SolveWitness total;
    total.kind = kind;
    for (const Subgraph& comp : components(g)) {
        SolveWitness w = per_component(comp.graph);
        if (additive)
            total.value += w.value;
        else
            total.value = std::max(total.value, w.value);
        for (const Edge& e : w.edges)
            total.edges.push_back({std::min(comp.vertex_map[static_cast<size_t>(e.u)],
                                            comp.vertex_map[static_cast<size_t>(e.v)]),
                                   std::max(comp.vertex_map[static_cast<size_t>(e.u)],
                                            comp.vertex_map[static_cast<size_t>(e.v)])});
        for (int v : w.vertices)
            total.vertices.push_back(comp.vertex_map[static_cast<size_t>(v)]);
        if (kind == WitnessKind::Coloring) {
            if (total.colors.empty())
                total.colors.assign(static_cast<size_t>(g.order()), -1);
            for (int v = 0; v < comp.graph.order(); ++v)
                total.colors[static_cast<size_t>(comp.vertex_map[static_cast<size_t>(v)])] =
                    w.colors[static_cast<size_t>(v)];
        }
    }
    std::sort(total.vertices.begin(), total.vertices.end());
    std::sort(total.edges.begin(), total.edges.end(),
              [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    return total;
}

} // namespace

SolveWitness max_matching(const Graph& g) {
    SolveWitness w = solve_per_component(g, WitnessKind::Matching, true, [](const Graph& comp) {
        BlossomMatcher matcher(comp);
        matcher.solve();
        SolveWitness cw;
        cw.kind = WitnessKind::Matching;
        for (int v = 0; v < comp.order(); ++v) {
            int u = matcher.match[static_cast<size_t>(v)];
            if (u > v)
                cw.edges.push_back({v, u});
        }
        cw.value = static_cast<int>(cw.edges.size());
        return cw;
    });
    self_check(w, g, "matching");
    return w;
}

SolveWitness independence_number(const Graph& g) {
    SolveWitness w =
        solve_per_component(g, WitnessKind::IndependentSet, true, [](const Graph& comp) {
            MisSolver solver(comp);
            std::uint64_t set = solver.run();
            SolveWitness cw;
            cw.kind = WitnessKind::IndependentSet;
            cw.value = solver.best;
            while (set) {
                cw.vertices.push_back(first(set));
                set &= set - 1;
            }
            return cw;
        });
    self_check(w, g, "independent set");
    return w;
}

SolveWitness clique_number(const Graph& g) {
    SolveWitness w = independence_number(complement(g));
    w.kind = WitnessKind::Clique;
    self_check(w, g, "clique");
    return w;
}

SolveWitness chromatic_number(const Graph& g) {
    if (g.order() > 20)
        throw std::invalid_argument("chromatic_number supports orders up to 20, got " +
                                    std::to_string(g.order()));
    SolveWitness w = solve_per_component(g, WitnessKind::Coloring, false, color_component);
    self_check(w, g, "coloring");
    return w;
}

bool has_perfect_matching(const Graph& g) {
    return g.order() % 2 == 0 && 2 * max_matching(g).value == g.order();
}

bool is_factor_critical(const Graph& g) {
    int n = g.order();
    if (n % 2 == 0 || !is_connected(g))
        return false;
    if (n == 1)
        return true;
    for (int v = 0; v < n; ++v) {
        Subgraph rest = delete_vertices(g, vertex_bit(v));
        if (2 * max_matching(rest.graph).value != n - 1)
            return false;
    }
    return true;
}

} // namespace egt
