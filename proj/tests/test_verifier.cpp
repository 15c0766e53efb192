#include <stdexcept>

#include "doctest.h"
#include "egt/graph.hpp"
#include "egt/solvers.hpp"
#include "egt/verifier.hpp"
#include "oracles.hpp"

using namespace egt;

namespace {
Graph g13() { return Graph::circulant(13, {1, 5, 8, 12}); }

const LedgerRow& row(const LedgerReport& r, const std::string& name) {
    for (const LedgerRow& x : r.rows)
        if (x.name == name)
            return x;
    REQUIRE(false);
    throw std::logic_error("row not found");
}
} // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational::make(2, 4) == Rational::make(1, 2));
    CHECK(Rational::make(-2, -4) == Rational::make(1, 2));
    CHECK(Rational::make(3, -6) == Rational::make(-1, 2));
    CHECK(Rational::make(0, 7) == Rational::make(0, 1));
    CHECK_THROWS_AS(Rational::make(1, 0), std::invalid_argument);
    CHECK(rational_ge(Rational::make(7, 4), Rational::make(3, 2)));
    CHECK(rational_ge(Rational::make(1, 2), Rational::make(1, 2)));
    CHECK(!rational_ge(Rational::make(1, 3), Rational::make(1, 2)));
    CHECK(to_string(Rational::make(7, 4)) == "7/4");
    CHECK(to_string(Rational::make(3, 1)) == "3");
}

TEST_CASE("bound specifications") {
    BoundSpec b1 = BoundSpec::bound1();
    CHECK(b1.scale() == 4); // 7/4*alpha + beta vs n  ->  7a + 4b vs 4n
    BoundSpec b2 = BoundSpec::bound2();
    CHECK(b2.scale() == 2); // alpha + 3/2*beta vs n  ->  2a + 3b vs 2n
}

TEST_CASE("both bounds are tight on the order-13 circulant") {
    Graph g = g13();
    BoundReport r1 = check_bound(g, BoundSpec::bound1());
    CHECK(r1.scaled_lhs == 52);
    CHECK(r1.scaled_rhs == 52);
    CHECK(r1.slack == 0);
    CHECK(r1.equality);
    CHECK(r1.alpha == 4);
    CHECK(r1.beta == 6);
    CHECK(r1.independent_set.validates(g));
    CHECK(r1.matching.validates(g));

    BoundReport r2 = check_bound(g, BoundSpec::bound2());
    CHECK(r2.scaled_lhs == 26);
    CHECK(r2.scaled_rhs == 26);
    CHECK(r2.equality);
}

TEST_CASE("bounds hold strictly on other small members of the class") {
    for (const Graph& g : {oracle::cycle(4), oracle::cycle(7), oracle::path(6),
                           oracle::complete_bipartite(4, 4), oracle::cycle(6)}) {
        BoundReport r1 = check_bound(g, BoundSpec::bound1());
        CHECK(r1.slack > 0);
        BoundReport r2 = check_bound(g, BoundSpec::bound2());
        CHECK(r2.slack >= 0);
    }
    // Bound 2 equality cases: the single vertex and the five-cycle.
    CHECK(check_bound(Graph(1), BoundSpec::bound2()).equality);
    CHECK(check_bound(oracle::cycle(5), BoundSpec::bound2()).equality);
    CHECK(!check_bound(Graph(1), BoundSpec::bound1()).equality);
    CHECK(!check_bound(oracle::cycle(5), BoundSpec::bound1()).equality);
}

TEST_CASE("bound domain is enforced") {
    CHECK_THROWS_AS(check_bound(oracle::complete(3), BoundSpec::bound1()),
                    std::invalid_argument); // triangle
    CHECK_THROWS_AS(check_bound(oracle::complete_bipartite(1, 5), BoundSpec::bound1()),
                    std::invalid_argument); // degree 5
    CHECK_THROWS_AS(classify_equality(oracle::complete(3), BoundSpec::bound2()),
                    std::invalid_argument);
    CHECK_THROWS_AS(inequality_ledger(oracle::complete(3)), std::invalid_argument);
    CHECK_THROWS_AS(inequality_ledger(oracle::complete_bipartite(1, 5)),
                    std::invalid_argument);
    BoundSpec odd{5, 3, 1, 1};
    CHECK_THROWS_AS(classify_equality(oracle::cycle(5), odd), std::invalid_argument);
}

TEST_CASE("equality classification by components") {
    // Whole-graph equality and per-component membership must agree.
    EqualityClassification one = classify_equality(g13(), BoundSpec::bound1());
    CHECK(one.equality);
    CHECK(one.all_components_match);
    CHECK(one.consistent);
    REQUIRE(one.components.size() == 1);
    CHECK(one.components[0].n == 13);
    CHECK(one.components[0].alpha == 4);
    CHECK(one.components[0].beta == 6);

    EqualityClassification c5b2 = classify_equality(oracle::cycle(5), BoundSpec::bound2());
    CHECK(c5b2.equality);
    CHECK(c5b2.all_components_match);
    CHECK(c5b2.consistent);

    EqualityClassification k1b2 = classify_equality(Graph(1), BoundSpec::bound2());
    CHECK(k1b2.equality);
    CHECK(k1b2.consistent);

    // C5 + C7: strict for bound 2, and C7 is not an allowed component.
    Graph mix = oracle::disjoint_union(oracle::cycle(5), oracle::cycle(7));
    EqualityClassification mix2 = classify_equality(mix, BoundSpec::bound2());
    CHECK(!mix2.equality); // 2*5 + 3*5 = 25 > 24
    CHECK(!mix2.all_components_match);
    CHECK(mix2.consistent);
    REQUIRE(mix2.components.size() == 2);
    CHECK(mix2.components[0].matches != mix2.components[1].matches);

    // C5 alone under bound 1: strict, and (5,2,2) is not the bound-1 form.
    EqualityClassification c5b1 = classify_equality(oracle::cycle(5), BoundSpec::bound1());
    CHECK(!c5b1.equality);
    CHECK(!c5b1.all_components_match);
    CHECK(c5b1.consistent);
}

TEST_CASE("ramsey alpha floor") {
    CHECK(ramsey_alpha_lower_bound(0) == 0);
    CHECK(ramsey_alpha_lower_bound(1) == 1);
    CHECK(ramsey_alpha_lower_bound(2) == 1);
    CHECK(ramsey_alpha_lower_bound(3) == 2);
    CHECK(ramsey_alpha_lower_bound(5) == 2);
    CHECK(ramsey_alpha_lower_bound(6) == 3);
    CHECK(ramsey_alpha_lower_bound(8) == 3);
    CHECK(ramsey_alpha_lower_bound(9) == 4);
    CHECK(ramsey_alpha_lower_bound(13) == 4);
    CHECK(ramsey_alpha_lower_bound(64) == 4);
}

TEST_CASE("independence ratio") {
    RatioVerdict g = independence_ratio_check(g13());
    CHECK(g.holds);
    CHECK(g.tight);
    CHECK(g.lhs == 52);
    CHECK(g.rhs == 52);
    RatioVerdict c5 = independence_ratio_check(oracle::cycle(5));
    CHECK(c5.holds);
    CHECK(!c5.tight); // 26 > 20
    CHECK_THROWS_AS(independence_ratio_check(oracle::complete(3)), std::invalid_argument);
}

TEST_CASE("large-matching shortcut") {
    // 13*6 = 78 = 6*13: not strictly above, so the shortcut does not apply.
    ShortcutVerdict g = perfect_matching_shortcut(g13());
    CHECK(!g.applicable);
    CHECK(g.lhs == 78);
    CHECK(g.rhs == 78);

    // C4: 13*2 = 26 > 24, both bounds strictly hold.
    ShortcutVerdict c4 = perfect_matching_shortcut(oracle::cycle(4));
    CHECK(c4.applicable);
    CHECK(c4.lhs == 26);
    CHECK(c4.rhs == 24);
    CHECK(c4.bound1.scaled_lhs == 22); // 7*2 + 4*2
    CHECK(c4.bound1.scaled_rhs == 16);
    CHECK(c4.bound2.scaled_lhs == 10); // 2*2 + 3*2
    CHECK(c4.bound2.scaled_rhs == 8);
    CHECK(c4.both_strict);

    // K2: 13 > 12.
    ShortcutVerdict k2 = perfect_matching_shortcut(Graph(2, {{0, 1}}));
    CHECK(k2.applicable);
    CHECK(k2.lhs == 13);
    CHECK(k2.rhs == 12);
    CHECK(k2.both_strict);
}

TEST_CASE("factor-critical component scores") {
    ComponentScore k1b1 = component_score(Graph(1), 1);
    CHECK(k1b1.score == Rational::make(3, 4)); // (7*1 - 2 - 2)/4
    CHECK(k1b1.floor == Rational::make(3, 4));
    CHECK(k1b1.floor_asserted);
    CHECK(k1b1.meets_floor);

    ComponentScore c5b1 = component_score(oracle::cycle(5), 1);
    CHECK(c5b1.score == Rational::make(1, 2)); // (14 - 10 - 2)/4
    CHECK(c5b1.floor == Rational::make(1, 2));
    CHECK(c5b1.meets_floor);

    ComponentScore c7b1 = component_score(oracle::cycle(7), 1);
    CHECK(c7b1.score == Rational::make(5, 4)); // (21 - 14 - 2)/4
    CHECK(c7b1.floor == Rational::make(5, 4));

    ComponentScore c9b1 = component_score(oracle::cycle(9), 1);
    CHECK(c9b1.score == Rational::make(2, 1)); // (28 - 18 - 2)/4
    CHECK(c9b1.floor == Rational::make(2, 1));

    ComponentScore c11b1 = component_score(oracle::cycle(11), 1);
    CHECK(c11b1.score == Rational::make(11, 4)); // (35 - 22 - 2)/4
    CHECK(c11b1.floor == Rational::make(1, 1));
    CHECK(c11b1.meets_floor);

    // The order-13 floor 7/4 is only asserted when min degree <= 3; the
    // 4-regular circulant scores 0 and is exempt.
    ComponentScore g13b1 = component_score(g13(), 1);
    CHECK(g13b1.score == Rational::make(0, 1)); // (28 - 26 - 2)/4
    CHECK(g13b1.floor == Rational::make(7, 4));
    CHECK(!g13b1.floor_asserted);
    CHECK(g13b1.min_degree == 4);

    ComponentScore k1b2 = component_score(Graph(1), 2);
    CHECK(k1b2.score == Rational::make(1, 2)); // (4 - 1 - 1)/4
    CHECK(k1b2.floor == Rational::make(1, 2));
    CHECK(k1b2.meets_floor);

    ComponentScore c5b2 = component_score(oracle::cycle(5), 2);
    CHECK(c5b2.score == Rational::make(1, 2)); // (8 - 5 - 1)/4
    CHECK(c5b2.floor == Rational::make(1, 26)); // (15 - 13)/52
    CHECK(c5b2.meets_floor);

    // Preconditions: connected, triangle-free, degree <= 4, factor-critical.
    CHECK_THROWS_AS(component_score(oracle::cycle(4), 1), std::invalid_argument);
    CHECK_THROWS_AS(component_score(oracle::path(3), 1), std::invalid_argument);
    CHECK_THROWS_AS(component_score(oracle::complete(3), 1), std::invalid_argument);
    CHECK_THROWS_AS(component_score(oracle::cycle(5), 3), std::invalid_argument);
}

TEST_CASE("inequality ledger on the order-13 circulant") {
    LedgerReport r = inequality_ledger(g13());
    CHECK(r.x_empty);
    CHECK(r.case_label == "factor-critical");
    CHECK(r.counts.c_ge11 == 1);
    CHECK(r.counts.n_ge11 == 13);
    CHECK(r.counts.r_size == 0);
    CHECK(r.hypotheses.min_degree_ge2);
    CHECK(!r.hypotheses.two_edges_per_odd_component);
    CHECK(r.hypotheses.beta_le_6n_over_13); // 78 <= 78

    const LedgerRow& identity = row(r, "matching_identity");
    CHECK(identity.is_identity);
    CHECK(identity.scaled_lhs == 12); // 2*6
    CHECK(identity.scaled_rhs == 12); // 13 + 0 - 1
    CHECK(identity.holds);

    const LedgerRow& density = row(r, "matching_density");
    CHECK(!density.applicable); // diagnostic only, never asserted
    CHECK(density.holds);       // 10*6 = 60 >= 3*13 + 7 = 46 here, not in general

    const LedgerRow& odd = row(r, "odd_component_matching");
    CHECK(!odd.applicable);
    CHECK(!odd.holds); // 24 < 25

    const LedgerRow& cap = row(r, "matching_ratio_cap");
    CHECK(cap.applicable);
    CHECK(cap.holds);
    CHECK(cap.scaled_lhs == 78);
    CHECK(cap.scaled_rhs == 78);

    const LedgerRow& census = row(r, "component_census");
    CHECK(census.applicable);
    CHECK(census.holds);
    CHECK(census.scaled_lhs == 0);
    CHECK(census.scaled_rhs == 0); // tight

    const LedgerRow& indset = row(r, "independence_sum");
    CHECK(indset.applicable);
    CHECK(indset.holds);
    CHECK(indset.scaled_lhs == 4);
    CHECK(indset.scaled_rhs == 4);

    const LedgerRow& half = row(r, "component_census_half");
    CHECK(half.denominator == 56);
    CHECK(half.holds);

    CHECK(r.unconditional_ok);
    CHECK(r.conditional_ok);
}

TEST_CASE("inequality ledger on the complete bipartite K24") {
    Graph k24 = oracle::complete_bipartite(2, 4);
    LedgerReport r = inequality_ledger(k24);
    CHECK(!r.x_empty);
    CHECK(r.case_label == "general");
    CHECK(r.counts.c1 == 4);
    CHECK(r.hypotheses.min_degree_ge2);
    CHECK(r.hypotheses.two_edges_per_odd_component);
    CHECK(r.hypotheses.beta_le_6n_over_13); // 26 <= 36

    // The density row fails here even though every hypothesis flag is true,
    // which is exactly why it is never gated on them.
    const LedgerRow& density = row(r, "matching_density");
    CHECK(!density.applicable);
    CHECK(!density.holds); // 10*2 = 20 < 3*6 + 7 = 25

    const LedgerRow& odd = row(r, "odd_component_matching");
    CHECK(odd.applicable);
    CHECK(odd.holds); // 4*2 = 8 >= 2*6 - 4 = 8, tight
    CHECK(odd.scaled_lhs == 8);
    CHECK(odd.scaled_rhs == 8);

    const LedgerRow& census = row(r, "component_census");
    CHECK(census.applicable);
    CHECK(census.holds); // 0 >= 14*6 - 26*4 = -20
    CHECK(census.scaled_rhs == -20);

    const LedgerRow& indset = row(r, "independence_sum");
    CHECK(indset.holds); // alpha = 4 >= 0 + 4*1

    CHECK(r.unconditional_ok);
    CHECK(r.conditional_ok);
}

TEST_CASE("inequality ledger case labels and hypothesis flags") {
    // Star: X = {center}, three singleton components, min degree 1.
    LedgerReport star = inequality_ledger(oracle::complete_bipartite(1, 3));
    CHECK(star.case_label == "general");
    CHECK(!star.hypotheses.min_degree_ge2);
    const LedgerRow& identity = row(star, "matching_identity");
    CHECK(identity.scaled_lhs == 2);  // 2*1
    CHECK(identity.scaled_rhs == 2);  // 4 + 1 - 3
    CHECK(identity.holds);
    CHECK(star.unconditional_ok);
    CHECK(star.conditional_ok);

    // C4: perfect matching, no odd components.
    LedgerReport c4 = inequality_ledger(oracle::cycle(4));
    CHECK(c4.case_label == "perfect-matching");
    CHECK(c4.x_empty);
    CHECK(c4.hypotheses.two_edges_per_odd_component); // vacuous
    const LedgerRow& odd = row(c4, "odd_component_matching");
    CHECK(odd.applicable);
    CHECK(odd.holds); // 4*2 = 8 >= 2*4 - 0
    CHECK(c4.conditional_ok);

    // Two five-cycles joined through a cut vertex: X = {x}, each C5 sends
    // only one matched edge toward X, so the two-edge hypothesis fails.
    EdgeList es;
    for (int base : {0, 5})
        for (int i = 0; i < 5; ++i)
            es.push_back({std::min(base + i, base + (i + 1) % 5),
                          std::max(base + i, base + (i + 1) % 5)});
    es.push_back({0, 10});
    es.push_back({5, 10});
    Graph link(11, es);
    LedgerReport r = inequality_ledger(link);
    CHECK(r.case_label == "general");
    CHECK(r.counts.c5 == 2);
    CHECK(!r.hypotheses.two_edges_per_odd_component);
    CHECK(r.unconditional_ok);
    CHECK(r.conditional_ok);

    // Disjoint odd factor-critical components, no separator, no even part.
    LedgerReport two = inequality_ledger(
        oracle::disjoint_union(oracle::cycle(5), oracle::cycle(7)));
    CHECK(two.case_label == "factor-critical components");
    CHECK(two.unconditional_ok);
    CHECK(two.conditional_ok);
}

TEST_CASE("chromatic binding on complements") {
    SUBCASE("complement of the order-13 circulant is tight") {
        ChiBindingVerdict v = chi_binding_check(complement(g13()));
        CHECK(v.pre_ok);
        CHECK(v.complement_ok);
        CHECK(v.identity_ok);
        CHECK(v.chi == 7);
        CHECK(v.omega == 4);
        CHECK(v.complement_beta == 6);
        CHECK(v.bound_ok);  // 28 <= 28
        CHECK(v.tight);
    }
    SUBCASE("complete graph") {
        ChiBindingVerdict v = chi_binding_check(oracle::complete(5));
        CHECK(v.pre_ok);
        CHECK(v.complement_ok);
        CHECK(v.identity_ok); // 5 = 5 - 0
        CHECK(v.chi == 5);
        CHECK(v.omega == 5);
        CHECK(v.bound_ok); // 20 <= 35
        CHECK(!v.tight);
    }
    SUBCASE("five-cycle is self-complementary") {
        ChiBindingVerdict v = chi_binding_check(oracle::cycle(5));
        CHECK(v.pre_ok);
        CHECK(v.identity_ok); // 3 = 5 - 2
        CHECK(v.chi == 3);
        CHECK(v.omega == 2);
        CHECK(v.bound_ok); // 12 <= 14
    }
    SUBCASE("three isolated vertices violate the precondition") {
        ChiBindingVerdict v = chi_binding_check(Graph(3));
        CHECK(!v.pre_ok);
        REQUIRE(v.witness.size() == 3);
        // The witness is an independent triple.
        Graph g(3);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                CHECK(!g.adjacent(v.witness[i], v.witness[j]));
    }
    SUBCASE("isolated vertex plus 5-clique violates the precondition") {
        Graph bad = oracle::disjoint_union(Graph(1), oracle::complete(5));
        ChiBindingVerdict v = chi_binding_check(bad);
        CHECK(!v.pre_ok);
        REQUIRE(v.witness.size() == 6);
        // First witness vertex is isolated from the other five, which form
        // a clique.
        for (int i = 1; i < 6; ++i) {
            CHECK(!bad.adjacent(v.witness[0], v.witness[i]));
            for (int j = i + 1; j < 6; ++j)
                CHECK(bad.adjacent(v.witness[i], v.witness[j]));
        }
    }
}
