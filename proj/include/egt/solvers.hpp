#pragma once

#include <vector>

#include "egt/graph.hpp"

// Exact solvers with self-checking certificates.  Disconnected inputs are
// solved per component and recombined (matching and independent set add up,
// clique and chromatic numbers take the maximum).  All solvers are
// deterministic: the same input graph always yields the same certificate.

namespace egt {

enum class WitnessKind { Matching, IndependentSet, Clique, Coloring };

struct SolveWitness {
    WitnessKind kind = WitnessKind::Matching;
    int value = 0;
    EdgeList edges;            // Matching: the matched edges
    std::vector<int> vertices; // IndependentSet / Clique: the vertex set
    std::vector<int> colors;   // Coloring: color of every vertex, 0..value-1

    // True iff the certificate proves `value` for its kind on g.
    bool validates(const Graph& g) const;
};

// Maximum matching via augmenting paths with blossom contraction (O(n^3)).
SolveWitness max_matching(const Graph& g);

// Maximum independent set: branch and bound over bitsets; branches on a
// max-degree vertex of the residual graph (lowest index breaks ties).
SolveWitness independence_number(const Graph& g);

// Maximum clique = maximum independent set of the complement.
SolveWitness clique_number(const Graph& g);

// Exact chromatic number by iterative deepening on k-colorability with a
// maximum-clique seed and first-fit color symmetry breaking.  Supported for
// n <= 20 only; larger orders throw std::invalid_argument.
SolveWitness chromatic_number(const Graph& g);

bool has_perfect_matching(const Graph& g);

// Connected, odd order, and every single-vertex deletion leaves a perfectly
// matchable graph.  K1 is factor-critical.
bool is_factor_critical(const Graph& g);

} // namespace egt
