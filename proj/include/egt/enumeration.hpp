#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "egt/graph.hpp"

// Isomorph-free exhaustive generation (canonical augmentation with a
// canonical-deletion parent check) and canonical labeling for graphs on at
// most 16 vertices.

namespace egt {

inline constexpr int kMaxEnumerationOrder = 16;

struct ClassConstraints {
    int max_order = 1;                 // graphs of exactly this order are emitted
    bool triangle_free = false;
    bool connected = false;
    std::optional<int> max_degree;
    std::optional<int> regular_degree; // every vertex has exactly this degree
    std::optional<int> min_degree;

    // Throws std::invalid_argument on out-of-envelope or nonsensical values.
    void validate() const;
};

// Canonical label: graph6 encoding of the lexicographically minimal adjacency
// bit string over all vertex orderings.  Two graphs on at most 16 vertices
// are isomorphic iff their labels are equal.  order[pos] = vertex placed at
// canonical position pos.
struct CanonicalLabeling {
    std::string label;
    std::vector<int> order;
};

CanonicalLabeling canonical_labeling(const Graph& g); // n <= 16
std::string canonical_form(const Graph& g);           // n <= 16

// Exactly one representative per isomorphism class satisfying the
// constraints, in a deterministic order (parent order x candidate subset
// order).  `emit` returns false to stop early.
void enumerate(const ClassConstraints& c, const std::function<bool(const Graph&)>& emit);

// Same stream as enumerate(), same order: the augmentation tree is
// partitioned at a fixed depth into independent units, units run on up to
// `workers` threads, and finished units are merged in deterministic unit
// order on the calling thread.
void enumerate_parallel(const ClassConstraints& c, int workers,
                        const std::function<void(const Graph&)>& emit);

// One item per input line: either a parsed graph or a per-line error.
struct IngestItem {
    int line_no = 0;     // 1-based
    std::string line;
    std::optional<Graph> graph;
    std::string error;   // empty on success
};

// Newline-delimited graph6 ingestion; malformed lines are reported through
// the callback and the stream continues.
void ingest_graph6(std::istream& in, const std::function<void(const IngestItem&)>& cb);

} // namespace egt
