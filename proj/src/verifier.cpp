#include "egt/verifier.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace egt {

namespace {

void require_bound_domain(const Graph& g, const char* what) {
    if (!is_triangle_free(g))
        throw std::invalid_argument(std::string(what) + " requires a triangle-free graph");
    if (degree_stats(g).max_degree > 4)
        throw std::invalid_argument(std::string(what) +
                                    " requires maximum degree at most 4");
}

} // namespace

Rational Rational::make(long long num, long long den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

bool rational_ge(const Rational& a, const Rational& b) {
    return a.num * b.den >= b.num * a.den;
}

std::string to_string(const Rational& r) {
    if (r.den == 1)
        return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

BoundSpec BoundSpec::bound1() { return BoundSpec{7, 4, 1, 1}; }
BoundSpec BoundSpec::bound2() { return BoundSpec{1, 1, 3, 2}; }

long long BoundSpec::scale() const {
    if (alpha_den <= 0 || beta_den <= 0)
        throw std::invalid_argument("bound denominators must be positive");
    return std::lcm(alpha_den, beta_den);
}

BoundReport check_bound(const Graph& g, const BoundSpec& spec) {
    require_bound_domain(g, "check_bound");
    long long scale = spec.scale();
    BoundReport r;
    r.independent_set = independence_number(g);
    r.matching = max_matching(g);
    r.alpha = r.independent_set.value;
    r.beta = r.matching.value;
    r.n = g.order();
    r.scaled_lhs = r.alpha * (spec.alpha_num * scale / spec.alpha_den) +
                   r.beta * (spec.beta_num * scale / spec.beta_den);
    r.scaled_rhs = scale * r.n;
    r.slack = r.scaled_lhs - r.scaled_rhs;
    r.equality = r.slack == 0;
    return r;
}

EqualityClassification classify_equality(const Graph& g, const BoundSpec& spec) {
    bool allow_small; // the single vertex and the 5-cycle
    if (spec == BoundSpec::bound1())
        allow_small = false;
    else if (spec == BoundSpec::bound2())
        allow_small = true;
    else
        throw std::invalid_argument("no equality characterization for this bound");

    BoundReport whole = check_bound(g, spec);
    EqualityClassification out;
    out.equality = whole.equality;
    out.all_components_match = true;
    for (const Subgraph& comp : components(g)) {
        ComponentVerdict cv;
        cv.vertices = comp.vertex_map;
        cv.n = comp.graph.order();
        cv.alpha = independence_number(comp.graph).value;
        cv.beta = max_matching(comp.graph).value;
        bool order13 = cv.n == 13 && cv.alpha == 4 && cv.beta == 6;
        bool small = allow_small && ((cv.n == 1 && cv.alpha == 1 && cv.beta == 0) ||
                                     (cv.n == 5 && cv.alpha == 2 && cv.beta == 2));
        cv.matches = order13 || small;
        out.all_components_match = out.all_components_match && cv.matches;
        out.components.push_back(std::move(cv));
    }
    out.consistent = out.equality == out.all_components_match;
    return out;
}

int ramsey_alpha_lower_bound(int n) {
    if (n <= 0)
        return 0;
    if (n <= 2)
        return 1;
    if (n <= 5)
        return 2;
    if (n <= 8)
        return 3;
    return 4;
}

RatioVerdict independence_ratio_check(const Graph& g) {
    require_bound_domain(g, "independence_ratio_check");
    RatioVerdict v;
    v.alpha = independence_number(g).value;
    v.n = g.order();
    v.lhs = 13LL * v.alpha;
    v.rhs = 4LL * v.n;
    v.holds = v.lhs >= v.rhs;
    v.tight = v.lhs == v.rhs;
    return v;
}

ShortcutVerdict perfect_matching_shortcut(const Graph& g) {
    require_bound_domain(g, "perfect_matching_shortcut");
    ShortcutVerdict v;
    int beta = max_matching(g).value;
    v.lhs = 13LL * beta;
    v.rhs = 6LL * g.order();
    v.applicable = v.lhs > v.rhs;
    v.bound1 = check_bound(g, BoundSpec::bound1());
    v.bound2 = check_bound(g, BoundSpec::bound2());
    v.both_strict = v.bound1.slack > 0 && v.bound2.slack > 0;
    return v;
}

ComponentScore component_score(const Graph& c, int bound) {
    if (bound != 1 && bound != 2)
        throw std::invalid_argument("component_score: bound must be 1 or 2");
    require_bound_domain(c, "component_score");
    if (!is_connected(c))
        throw std::invalid_argument("component_score requires a connected graph");
    if (!is_factor_critical(c))
        throw std::invalid_argument("component_score requires a factor-critical graph");

    ComponentScore s;
    s.n = c.order();
    s.alpha = independence_number(c).value;
    s.min_degree = degree_stats(c).min_degree;
    s.score = bound == 1 ? Rational::make(7LL * s.alpha - 2LL * s.n - 2, 4)
                         : Rational::make(4LL * s.alpha - s.n - 1, 4);

    // Factor-critical graphs have odd order, and no triangle-free one has
    // order 3, so the case analysis below is exhaustive.
    s.floor_asserted = true;
    if (bound == 1) {
        switch (s.n) {
        case 1: s.floor = Rational::make(3, 4); break;
        case 5: s.floor = Rational::make(1, 2); break;
        case 7: s.floor = Rational::make(5, 4); break;
        case 9: s.floor = Rational::make(2, 1); break;
        case 11: s.floor = Rational::make(1, 1); break;
        case 13:
            s.floor = Rational::make(7, 4);
            s.floor_asserted = s.min_degree <= 3;
            break;
        default:
            if (s.n < 15)
                throw std::logic_error("component_score: impossible order");
            s.floor = Rational::make(s.n - 13, 26);
        }
    } else {
        if (s.n == 1)
            s.floor = Rational::make(1, 2);
        else if (s.n >= 5)
            s.floor = Rational::make(3LL * s.n - 13, 52);
        else
            throw std::logic_error("component_score: impossible order");
    }
    s.meets_floor = rational_ge(s.score, s.floor);
    return s;
}

LedgerReport inequality_ledger(const Graph& g) {
    require_bound_domain(g, "inequality_ledger");

    LedgerReport rep;
    rep.decomposition = gallai_edmonds(g);
    rep.counts = ledger_counts(g, rep.decomposition);

    const GallaiEdmonds& ge = rep.decomposition;
    const LedgerCounts& ct = rep.counts;
    long long n = g.order();
    long long beta = max_matching(g).value;
    long long alpha = independence_number(g).value;
    long long x_size = std::popcount(ge.x);
    long long o = static_cast<long long>(ge.odd_components.size());

    rep.hypotheses.min_degree_ge2 = degree_stats(g).min_degree >= 2;
    rep.hypotheses.two_edges_per_odd_component = true;
    for (const Subgraph& comp : ge.odd_components) {
        int edges_to_x = 0;
        for (int v : comp.vertex_map)
            edges_to_x += std::popcount(g.neighbors(v) & ge.x);
        if (edges_to_x < 2)
            rep.hypotheses.two_edges_per_odd_component = false;
    }
    rep.hypotheses.beta_le_6n_over_13 = 13 * beta <= 6 * n;

    long long alpha_even = 0;
    if (ct.r_size > 0)
        alpha_even = independence_number(induced_subgraph(g, ge.even_part).graph).value;
    long long alpha_odd_sum = 0;
    for (const Subgraph& comp : ge.odd_components)
        alpha_odd_sum += independence_number(comp.graph).value;

    long long census = 14 * n - 26 * ct.c1 - 78 * ct.c5 - 104 * ct.c7 - 130 * ct.c9 -
                       13 * ct.c_ge11 - 13 * ct.n_ge11 - 13 * ct.r_size;

    auto add_row = [&rep](std::string name, long long lhs, long long rhs, int den,
                          bool identity, bool applicable) {
        LedgerRow row;
        row.name = std::move(name);
        row.scaled_lhs = lhs;
        row.scaled_rhs = rhs;
        row.denominator = den;
        row.is_identity = identity;
        row.applicable = applicable;
        row.holds = identity ? lhs == rhs : lhs >= rhs;
        rep.rows.push_back(std::move(row));
    };

    add_row("matching_identity", 2 * beta, n + x_size - o, 2, true, true);
    add_row("matching_density", 10 * beta, 3 * n + 7, 10, false, false);
    add_row("odd_component_matching", 4 * beta, 2 * n - o, 4, false,
            rep.hypotheses.two_edges_per_odd_component);
    add_row("matching_ratio_cap", 6 * n, 13 * beta, 13, false,
            rep.hypotheses.beta_le_6n_over_13);
    add_row("component_census", 0, census, 28, false, rep.hypotheses.beta_le_6n_over_13);
    add_row("independence_sum", alpha, alpha_even + alpha_odd_sum, 1, false, true);
    add_row("component_census_half", 0, census, 56, false,
            rep.hypotheses.beta_le_6n_over_13);

    rep.x_empty = ge.x == 0;
    if (!rep.x_empty)
        rep.case_label = "general";
    else if (o == 0)
        rep.case_label = "perfect-matching";
    else if (o == 1 && ct.r_size == 0)
        rep.case_label = "factor-critical";
    else
        rep.case_label = "factor-critical components";

    rep.unconditional_ok = true;
    rep.conditional_ok = true;
    for (const LedgerRow& row : rep.rows) {
        bool unconditional = row.name == "matching_identity" || row.name == "independence_sum";
        if (unconditional && !row.holds)
            rep.unconditional_ok = false;
        if (!unconditional && row.applicable && !row.holds)
            rep.conditional_ok = false;
    }
    return rep;
}

ChiBindingVerdict chi_binding_check(const Graph& g) {
    ChiBindingVerdict v;
    v.n = g.order();

    SolveWitness indep = independence_number(g);
    if (indep.value >= 3) {
        v.witness.assign(indep.vertices.begin(), indep.vertices.begin() + 3);
        return v; // three pairwise nonadjacent vertices: pre_ok stays false
    }
    for (int u = 0; u < g.order(); ++u) {
        VertexSet non_nbrs = g.vertex_mask() & ~g.closed_neighborhood(u);
        if (std::popcount(non_nbrs) < 5)
            continue;
        // With alpha <= 2 the non-neighbors are pairwise adjacent, so any
        // five of them complete a forbidden vertex-plus-5-clique pattern.
        v.witness.push_back(u);
        VertexSet it = non_nbrs;
        while (static_cast<int>(v.witness.size()) < 6) {
            int w = std::countr_zero(it);
            it &= it - 1;
            v.witness.push_back(w);
        }
        return v;
    }
    v.pre_ok = true;

    Graph comp = complement(g);
    v.complement_ok = is_triangle_free(comp) && degree_stats(comp).max_degree <= 4;
    v.chi = chromatic_number(g).value;
    v.complement_beta = max_matching(comp).value;
    v.identity_ok = v.chi == v.n - v.complement_beta;
    v.omega = clique_number(g).value;
    v.bound_ok = 4 * v.chi <= 7 * v.omega;
    v.tight = 4 * v.chi == 7 * v.omega;
    return v;
}

} // namespace egt
