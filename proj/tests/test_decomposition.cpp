#include <bit>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "egt/decomposition.hpp"
#include "egt/graph.hpp"
#include "egt/solvers.hpp"
#include "oracles.hpp"

using namespace egt;

TEST_CASE("decomposition of small named graphs") {
    SUBCASE("path on three vertices") {
        Graph p3 = oracle::path(3);
        GallaiEdmonds d = gallai_edmonds(p3);
        CHECK(d.x == vertex_bit(1));
        CHECK(d.odd_components.size() == 2);
        CHECK(d.even_part == 0);
        CHECK(d.deficiency == 1);
        CHECK(verify_ge(p3, d).ok());
        LedgerCounts lc = ledger_counts(p3, d);
        CHECK(lc.c1 == 2);
        CHECK(lc.r_size == 0);
    }
    SUBCASE("star with three leaves") {
        Graph star = oracle::complete_bipartite(1, 3); // vertex 0 is the center
        GallaiEdmonds d = gallai_edmonds(star);
        CHECK(d.x == vertex_bit(0));
        CHECK(d.odd_components.size() == 3);
        CHECK(d.deficiency == 2);
        CHECK(verify_ge(star, d).ok());
        CHECK(ledger_counts(star, d).c1 == 3);
    }
    SUBCASE("four-cycle has a perfect matching") {
        Graph c4 = oracle::cycle(4);
        GallaiEdmonds d = gallai_edmonds(c4);
        CHECK(d.x == 0);
        CHECK(d.odd_components.empty());
        CHECK(d.even_part == c4.vertex_mask());
        CHECK(d.deficiency == 0);
        CHECK(verify_ge(c4, d).ok());
    }
    SUBCASE("five-cycle is factor-critical") {
        Graph c5 = oracle::cycle(5);
        GallaiEdmonds d = gallai_edmonds(c5);
        CHECK(d.x == 0);
        REQUIRE(d.odd_components.size() == 1);
        CHECK(d.odd_components[0].graph.order() == 5);
        CHECK(d.deficiency == 1);
        CHECK(verify_ge(c5, d).ok());
        CHECK(ledger_counts(c5, d).c5 == 1);
    }
    SUBCASE("order-13 circulant is one big factor-critical block") {
        Graph g13 = Graph::circulant(13, {1, 5, 8, 12});
        GallaiEdmonds d = gallai_edmonds(g13);
        CHECK(d.x == 0);
        REQUIRE(d.odd_components.size() == 1);
        CHECK(d.deficiency == 1);
        CHECK(verify_ge(g13, d).ok());
        LedgerCounts lc = ledger_counts(g13, d);
        CHECK(lc.c_ge11 == 1);
        CHECK(lc.n_ge11 == 13);
        CHECK(lc.r_size == 0);
    }
    SUBCASE("two five-cycles hanging off one vertex") {
        EdgeList es;
        for (int base : {0, 5})
            for (int i = 0; i < 5; ++i)
                es.push_back({std::min(base + i, base + (i + 1) % 5),
                              std::max(base + i, base + (i + 1) % 5)});
        es.push_back({0, 10});
        es.push_back({5, 10});
        Graph g(11, es);
        CHECK(max_matching(g).value == 5);
        GallaiEdmonds d = gallai_edmonds(g);
        CHECK(d.x == vertex_bit(10));
        CHECK(d.odd_components.size() == 2);
        CHECK(verify_ge(g, d).ok());
        LedgerCounts lc = ledger_counts(g, d);
        CHECK(lc.c5 == 2);
    }
}

TEST_CASE("decomposition verifies and matches the subset oracle on random graphs") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 11);
        Graph g = oracle::random_graph(rng, n, 0.05 + 0.9 * (trial % 11) / 10.0);
        GallaiEdmonds d = gallai_edmonds(g);
        GeVerification v = verify_ge(g, d);
        CHECK(v.partition_ok);
        CHECK(v.factor_critical_ok);
        CHECK(v.beta_identity_ok);
        CHECK(d.deficiency == oracle::brute_deficiency(g));
    }
}

TEST_CASE("verification rejects doctored decompositions") {
    Graph star = oracle::complete_bipartite(1, 3);
    // Claim the whole star is one factor-critical odd block with empty X.
    GallaiEdmonds fake;
    fake.x = 0;
    fake.odd_components.push_back(induced_subgraph(star, star.vertex_mask()));
    fake.even_part = 0;
    fake.deficiency = 1;
    GeVerification v = verify_ge(star, fake);
    CHECK(!v.ok());
    CHECK(!v.factor_critical_ok);

    // Out-of-range labels in the claimed component must be rejected, not crash.
    GallaiEdmonds hostile = gallai_edmonds(star);
    REQUIRE(!hostile.odd_components.empty());
    hostile.odd_components[0].vertex_map[0] = 63;
    CHECK(!verify_ge(star, hostile).ok());

    CHECK_THROWS_AS(ledger_counts(star, fake), std::invalid_argument);
}

TEST_CASE("ledger counts require a triangle-free graph") {
    Graph k3 = oracle::complete(3);
    GallaiEdmonds d = gallai_edmonds(k3);
    CHECK(verify_ge(k3, d).ok()); // decomposition itself is fine
    CHECK_THROWS_AS(ledger_counts(k3, d), std::invalid_argument);
}
