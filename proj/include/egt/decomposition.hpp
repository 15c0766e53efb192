#pragma once

#include <vector>

#include "egt/graph.hpp"

// Gallai-Edmonds decomposition.  D = vertices missed by some maximum matching
// (computed definitionally: v is in D iff deleting v does not drop the
// matching number), X = neighbors of D outside D, the odd components of G - X
// are the factor-critical pieces, and R collects the even components.

namespace egt {

struct GallaiEdmonds {
    VertexSet x = 0;                    // the separator A(G)
    std::vector<Subgraph> odd_components; // odd components of G - X, original labels in vertex_map
    VertexSet even_part = 0;            // R: union of even components of G - X
    int deficiency = 0;                 // o(G - X) - |X| = n - 2*beta
};

GallaiEdmonds gallai_edmonds(const Graph& g);

// Independent re-check of a claimed decomposition; failures are verdicts.
struct GeVerification {
    bool partition_ok = false;       // X, odd components, R partition V and match components(G - X)
    bool factor_critical_ok = false; // every claimed odd component is factor-critical
    bool beta_identity_ok = false;   // 2*beta(G) == n + |X| - o(G - X), deficiency consistent
    bool ok() const { return partition_ok && factor_critical_ok && beta_identity_ok; }
};

GeVerification verify_ge(const Graph& g, const GallaiEdmonds& d);

// Odd components bucketed by order.  Requires a verified decomposition of a
// triangle-free graph; an order-3 odd component is impossible there and
// raises std::logic_error.
struct LedgerCounts {
    int c1 = 0, c5 = 0, c7 = 0, c9 = 0;
    int c_ge11 = 0; // number of odd components of order >= 11
    int n_ge11 = 0; // total vertices in components of order >= 11
    int r_size = 0; // |R|
};

LedgerCounts ledger_counts(const Graph& g, const GallaiEdmonds& d);

} // namespace egt
