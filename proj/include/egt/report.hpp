#pragma once

#include <string>

#include "json.hpp"

#include "egt/decomposition.hpp"
#include "egt/solvers.hpp"
#include "egt/verifier.hpp"

// JSON shapes for every verdict the toolkit emits.  The command-line tool
// writes one record per line (JSONL); field order is fixed so identical
// inputs produce identical lines.

namespace egt {

using Json = nlohmann::ordered_json;

struct VerdictRecord {
    std::string command; // invariants | verify | decompose | extremal
    std::string graph6;  // the graph the record is about
    std::string status;  // pass | fail | inapplicable | error
    double ms = 0.0;     // wall-clock time spent on this graph
    Json invariants;     // n, m, degree range, alpha/beta/omega/chi as computed
    Json data;           // command-specific payload

    std::string to_line() const; // single-line JSON rendering
};

Json to_json(const SolveWitness& w);
Json to_json(const Rational& r);
Json to_json(const BoundReport& r);
Json to_json(const EqualityClassification& c);
Json to_json(const RatioVerdict& v);
Json to_json(const ShortcutVerdict& v);
Json to_json(const ComponentScore& s);
Json to_json(const LedgerRow& row);
Json to_json(const LedgerReport& rep);
Json to_json(const ChiBindingVerdict& v);
Json to_json(const GallaiEdmonds& ge);
Json to_json(const GeVerification& v);
Json to_json(const LedgerCounts& c);

std::vector<int> set_to_vertices(VertexSet s);

} // namespace egt
