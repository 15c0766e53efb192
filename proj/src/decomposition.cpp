#include "egt/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "egt/solvers.hpp"

namespace egt {

namespace {

VertexSet map_to_original(const Subgraph& sub) {
    VertexSet s = 0;
    for (int v : sub.vertex_map)
        s |= vertex_bit(v);
    return s;
}

// Components of g - x with vertex maps composed back to g's labels.
std::vector<Subgraph> components_without(const Graph& g, VertexSet x) {
    if (!x)
        return components(g);
    Subgraph rest = delete_vertices(g, x);
    std::vector<Subgraph> comps = components(rest.graph);
    for (Subgraph& c : comps)
        for (int& v : c.vertex_map)
            v = rest.vertex_map[static_cast<size_t>(v)];
    return comps;
}

} // namespace

GallaiEdmonds gallai_edmonds(const Graph& g) {
    int n = g.order();
    int beta = max_matching(g).value;

    VertexSet d = 0; // vertices missed by some maximum matching
    for (int v = 0; v < n; ++v) {
        if (n == 1) {
            d |= vertex_bit(v); // K1: the vertex is missed by the empty matching
            continue;
        }
        Subgraph rest = delete_vertices(g, vertex_bit(v));
        if (max_matching(rest.graph).value == beta)
            d |= vertex_bit(v);
    }

    VertexSet x = 0;
    for (VertexSet it = d; it;) {
        int v = std::countr_zero(it);
        it &= it - 1;
        x |= g.neighbors(v);
    }
    x &= ~d;

    GallaiEdmonds out;
    out.x = x;
    if (x == g.vertex_mask()) { // cannot happen: D would be empty only if every
        throw std::logic_error("gallai_edmonds: separator swallowed the graph");
    }
    int odd = 0;
    for (Subgraph& comp : components_without(g, x)) {
        if (comp.graph.order() % 2 == 1) {
            ++odd;
            out.odd_components.push_back(std::move(comp));
        } else {
            out.even_part |= map_to_original(comp);
        }
    }
    out.deficiency = odd - std::popcount(x);
    return out;
}

GeVerification verify_ge(const Graph& g, const GallaiEdmonds& d) {
    GeVerification v;
    int n = g.order();

    // reject out-of-range labels before any bitset work
    bool labels_ok = (d.x & ~g.vertex_mask()) == 0 && (d.even_part & ~g.vertex_mask()) == 0;
    for (const Subgraph& comp : d.odd_components)
        for (int u : comp.vertex_map)
            if (u < 0 || u >= n)
                labels_ok = false;
    if (!labels_ok)
        return v;

    // partition + component structure
    VertexSet seen = d.x;
    bool disjoint = (d.x & d.even_part) == 0;
    for (const Subgraph& comp : d.odd_components) {
        VertexSet s = map_to_original(comp);
        if ((seen & s) || comp.graph.order() != std::popcount(s))
            disjoint = false;
        seen |= s;
    }
    if (seen & d.even_part)
        disjoint = false;
    seen |= d.even_part;
    bool covers = seen == g.vertex_mask();

    bool structure = d.x != g.vertex_mask();
    if (disjoint && covers && structure) {
        // claimed pieces must be exactly the components of g - X
        std::vector<VertexSet> claimed_odd;
        for (const Subgraph& comp : d.odd_components)
            claimed_odd.push_back(map_to_original(comp));
        std::sort(claimed_odd.begin(), claimed_odd.end());
        std::vector<VertexSet> actual_odd;
        VertexSet actual_even = 0;
        for (const Subgraph& comp : components_without(g, d.x)) {
            VertexSet s = map_to_original(comp);
            if (comp.graph.order() % 2 == 1)
                actual_odd.push_back(s);
            else
                actual_even |= s;
        }
        std::sort(actual_odd.begin(), actual_odd.end());
        structure = claimed_odd == actual_odd && actual_even == d.even_part;

        // claimed induced subgraphs must match g
        for (const Subgraph& comp : d.odd_components) {
            for (int a = 0; a < comp.graph.order(); ++a)
                for (int b = a + 1; b < comp.graph.order(); ++b) {
                    bool in_g = g.adjacent(comp.vertex_map[static_cast<size_t>(a)],
                                           comp.vertex_map[static_cast<size_t>(b)]);
                    if (comp.graph.adjacent(a, b) != in_g)
                        structure = false;
                }
        }
    }
    v.partition_ok = disjoint && covers && structure;

    v.factor_critical_ok = true;
    for (const Subgraph& comp : d.odd_components)
        if (!is_factor_critical(comp.graph))
            v.factor_critical_ok = false;

    int beta = max_matching(g).value;
    int odd = static_cast<int>(d.odd_components.size());
    int x_size = std::popcount(d.x);
    v.beta_identity_ok =
        2 * beta == n + x_size - odd && d.deficiency == odd - x_size;
    return v;
}

LedgerCounts ledger_counts(const Graph& g, const GallaiEdmonds& d) {
    if (!is_triangle_free(g))
        throw std::invalid_argument("ledger_counts requires a triangle-free graph");
    if (!verify_ge(g, d).ok())
        throw std::invalid_argument("ledger_counts requires a verified decomposition");
    LedgerCounts counts;
    for (const Subgraph& comp : d.odd_components) {
        switch (comp.graph.order()) {
        case 1: ++counts.c1; break;
        case 3:
            throw std::logic_error(
                "triangle-free graphs admit no factor-critical component of order 3");
        case 5: ++counts.c5; break;
        case 7: ++counts.c7; break;
        case 9: ++counts.c9; break;
        default:
            ++counts.c_ge11;
            counts.n_ge11 += comp.graph.order();
            break;
        }
    }
    counts.r_size = std::popcount(d.even_part);
    return counts;
}

} // namespace egt
