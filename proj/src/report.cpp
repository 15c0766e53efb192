#include "egt/report.hpp"

#include <bit>
#include <cmath>

namespace egt {

std::vector<int> set_to_vertices(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(std::popcount(s)));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

std::string VerdictRecord::to_line() const {
    Json j;
    j["command"] = command;
    j["graph6"] = graph6;
    j["status"] = status;
    j["ms"] = std::round(ms * 1000.0) / 1000.0;
    j["invariants"] = invariants.is_null() ? Json::object() : invariants;
    j["data"] = data;
    return j.dump();
}

Json to_json(const SolveWitness& w) {
    Json j;
    j["value"] = w.value;
    switch (w.kind) {
    case WitnessKind::Matching: {
        Json edges = Json::array();
        for (const Edge& e : w.edges)
            edges.push_back(Json::array({e.u, e.v}));
        j["edges"] = std::move(edges);
        break;
    }
    case WitnessKind::IndependentSet:
    case WitnessKind::Clique:
        j["vertices"] = w.vertices;
        break;
    case WitnessKind::Coloring:
        j["colors"] = w.colors;
        break;
    }
    return j;
}

Json to_json(const Rational& r) {
    Json j;
    j["num"] = r.num;
    j["den"] = r.den;
    j["text"] = to_string(r);
    return j;
}

Json to_json(const BoundReport& r) {
    Json j;
    j["scaled_lhs"] = r.scaled_lhs;
    j["scaled_rhs"] = r.scaled_rhs;
    j["slack"] = r.slack;
    j["equality"] = r.equality;
    j["alpha"] = r.alpha;
    j["beta"] = r.beta;
    j["n"] = r.n;
    j["independent_set"] = to_json(r.independent_set);
    j["matching"] = to_json(r.matching);
    return j;
}

Json to_json(const EqualityClassification& c) {
    Json j;
    j["equality"] = c.equality;
    j["all_components_match"] = c.all_components_match;
    j["consistent"] = c.consistent;
    Json comps = Json::array();
    for (const ComponentVerdict& cv : c.components) {
        Json cj;
        cj["vertices"] = cv.vertices;
        cj["n"] = cv.n;
        cj["alpha"] = cv.alpha;
        cj["beta"] = cv.beta;
        cj["matches"] = cv.matches;
        comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
    return j;
}

Json to_json(const RatioVerdict& v) {
    Json j;
    j["lhs_13alpha"] = v.lhs;
    j["rhs_4n"] = v.rhs;
    j["holds"] = v.holds;
    j["tight"] = v.tight;
    j["alpha"] = v.alpha;
    j["n"] = v.n;
    return j;
}

Json to_json(const ShortcutVerdict& v) {
    Json j;
    j["applicable"] = v.applicable;
    j["lhs_13beta"] = v.lhs;
    j["rhs_6n"] = v.rhs;
    j["bound1"] = to_json(v.bound1);
    j["bound2"] = to_json(v.bound2);
    j["both_strict"] = v.both_strict;
    return j;
}

Json to_json(const ComponentScore& s) {
    Json j;
    j["score"] = to_json(s.score);
    j["floor"] = to_json(s.floor);
    j["floor_asserted"] = s.floor_asserted;
    j["meets_floor"] = s.meets_floor;
    j["n"] = s.n;
    j["alpha"] = s.alpha;
    j["min_degree"] = s.min_degree;
    return j;
}

Json to_json(const LedgerRow& row) {
    Json j;
    j["name"] = row.name;
    j["scaled_lhs"] = row.scaled_lhs;
    j["scaled_rhs"] = row.scaled_rhs;
    j["denominator"] = row.denominator;
    j["relation"] = row.is_identity ? "eq" : "ge";
    j["applicable"] = row.applicable;
    j["holds"] = row.holds;
    return j;
}

Json to_json(const LedgerCounts& c) {
    Json j;
    j["c1"] = c.c1;
    j["c5"] = c.c5;
    j["c7"] = c.c7;
    j["c9"] = c.c9;
    j["c_ge11"] = c.c_ge11;
    j["n_ge11"] = c.n_ge11;
    j["r_size"] = c.r_size;
    return j;
}

Json to_json(const GallaiEdmonds& ge) {
    Json j;
    j["x"] = set_to_vertices(ge.x);
    Json comps = Json::array();
    for (const Subgraph& comp : ge.odd_components)
        comps.push_back(comp.vertex_map);
    j["odd_components"] = std::move(comps);
    j["even_part"] = set_to_vertices(ge.even_part);
    j["deficiency"] = ge.deficiency;
    return j;
}

Json to_json(const GeVerification& v) {
    Json j;
    j["partition_ok"] = v.partition_ok;
    j["factor_critical_ok"] = v.factor_critical_ok;
    j["beta_identity_ok"] = v.beta_identity_ok;
    j["ok"] = v.ok();
    return j;
}

Json to_json(const LedgerReport& rep) {
    Json j;
    j["decomposition"] = to_json(rep.decomposition);
    j["counts"] = to_json(rep.counts);
    Json hyp;
    hyp["min_degree_ge2"] = rep.hypotheses.min_degree_ge2;
    hyp["two_edges_per_odd_component"] = rep.hypotheses.two_edges_per_odd_component;
    hyp["beta_le_6n_over_13"] = rep.hypotheses.beta_le_6n_over_13;
    j["hypotheses"] = std::move(hyp);
    Json rows = Json::array();
    for (const LedgerRow& row : rep.rows)
        rows.push_back(to_json(row));
    j["rows"] = std::move(rows);
    j["x_empty"] = rep.x_empty;
    j["case"] = rep.case_label;
    j["unconditional_ok"] = rep.unconditional_ok;
    j["conditional_ok"] = rep.conditional_ok;
    return j;
}

Json to_json(const ChiBindingVerdict& v) {
    Json j;
    j["pre_ok"] = v.pre_ok;
    j["witness"] = v.witness;
    j["complement_ok"] = v.complement_ok;
    j["identity_ok"] = v.identity_ok;
    j["bound_ok"] = v.bound_ok;
    j["tight"] = v.tight;
    j["n"] = v.n;
    j["chi"] = v.chi;
    j["omega"] = v.omega;
    j["complement_beta"] = v.complement_beta;
    return j;
}

} // namespace egt
