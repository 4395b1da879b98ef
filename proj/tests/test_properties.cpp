#include <catch2/catch_amalgamated.hpp>

#include "aeg/minor.hpp"
#include "aeg/properties.hpp"
#include "test_helpers.hpp"

using namespace aeg;
using namespace aeg::testing;

TEST_CASE("outerplanarity on the named graphs") {
    CHECK_FALSE(is_outerplanar(k4_graph()));
    CHECK_FALSE(is_outerplanar(k23_graph()));

    // triangulated hexagon: C6 (1-based) plus chords 2-6, 2-5, 3-5
    SimpleGraph hex = cycle_graph(6);
    hex.add_edge(1, 5);
    hex.add_edge(1, 4);
    hex.add_edge(2, 4);
    CHECK(hex.edge_count() == 9);
    CHECK(is_outerplanar(hex));

    CHECK(is_outerplanar(diamond_graph()));
    CHECK(is_outerplanar(cycle_graph(9)));
    CHECK(is_outerplanar(SimpleGraph(5)));  // edgeless

    // K4 with each edge subdivided once is still a K4 subdivision
    SimpleGraph sub(10);
    int next = 4, idx = 0;
    (void)idx;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) {
            sub.add_edge(u, next);
            sub.add_edge(next, v);
            ++next;
        }
    CHECK_FALSE(is_outerplanar(sub));

    // two triangles sharing a vertex plus a bridge between them stays outerplanar
    SimpleGraph bowtie_bridge = SimpleGraph::from_edges(
        5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {3, 4}, {0, 3}});
    CHECK(is_outerplanar(bowtie_bridge));
}

TEST_CASE("diamond-minor recognition on the named graphs") {
    CHECK_FALSE(is_diamond_minor_free(diamond_graph()));

    SimpleGraph bowtie = SimpleGraph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    CHECK(is_diamond_minor_free(bowtie));

    SimpleGraph shared_edge =
        SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(is_diamond_minor_free(shared_edge));

    CHECK(is_diamond_minor_free(cycle_graph(7)));
    CHECK(is_diamond_minor_free(triangle_chain(9)));
    CHECK_FALSE(is_diamond_minor_free(k4_graph()));
}

TEST_CASE("degeneracy certificates") {
    SimpleGraph tree = SimpleGraph::from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
    auto ct = degeneracy(tree);
    CHECK(ct.k == 1);
    CHECK(valid_degeneracy_ordering(tree, ct.ordering, ct.k));

    auto c5 = degeneracy(cycle_graph(5));
    CHECK(c5.k == 2);

    auto k5 = degeneracy(complete_graph(5));
    CHECK(k5.k == 4);
    CHECK(valid_degeneracy_ordering(complete_graph(5), k5.ordering, 4));
    CHECK_FALSE(valid_degeneracy_ordering(complete_graph(5), k5.ordering, 3));

    CHECK(degeneracy(SimpleGraph(4)).k == 0);
}

TEST_CASE("degeneracy certificate is minimal on random graphs") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        SimpleGraph g = random_graph(10, 0.4, rng);
        auto cert = degeneracy(g);
        CHECK(valid_degeneracy_ordering(g, cert.ordering, cert.k));
        if (cert.k > 0) {
            // no ordering can do better than k: the peeling left a witness
            // subgraph of minimum degree k, so k-1 must fail
            bool weaker_ok = valid_degeneracy_ordering(g, cert.ordering, cert.k - 1);
            CHECK_FALSE(weaker_ok);
        }
    }
}

TEST_CASE("is_losing dispatch") {
    CHECK_FALSE(is_losing(SimpleGraph(4), GameFamily::outerplanar()));
    CHECK_FALSE(is_losing(SimpleGraph(4), GameFamily::diamond_free()));
    CHECK_FALSE(is_losing(SimpleGraph(4), GameFamily::k_degenerate(1)));
    CHECK(is_losing(k4_graph(), GameFamily::outerplanar()));

    SimpleGraph diamond_padded(7);
    for (Edge e : diamond_graph().edges()) diamond_padded.add_edge(e.u, e.v);
    CHECK(is_losing(diamond_padded, GameFamily::diamond_free()));

    CHECK(is_losing(cycle_graph(5), GameFamily::k_degenerate(1)));
    CHECK_FALSE(is_losing(cycle_graph(5), GameFamily::k_degenerate(2)));
}

TEST_CASE("extremal numbers and tau bounds") {
    CHECK(extremal(GameFamily::diamond_free(), 21) == 29);
    CHECK(extremal(GameFamily::k_degenerate(2), 10) == 17);
    CHECK(extremal(GameFamily::outerplanar(), 3) == 3);

    auto op10 = tau_bounds(GameFamily::outerplanar(), 10);
    CHECK(op10.lower == 10);
    CHECK(op10.upper == 18);
    auto df7 = tau_bounds(GameFamily::diamond_free(), 7);
    CHECK(df7.lower == 5);
    CHECK(df7.upper == 9);
    auto kd4 = tau_bounds(GameFamily::k_degenerate(1), 4);
    CHECK(kd4.lower == 3);
    CHECK(kd4.upper == 4);

    CHECK_THROWS_AS(extremal(GameFamily::outerplanar(), 1), InvalidParameter);
    CHECK_THROWS_AS(extremal(GameFamily::k_degenerate(4), 4), InvalidParameter);
    CHECK_THROWS_AS(GameFamily::k_degenerate(0), InvalidParameter);
}

TEST_CASE("extremal witnesses") {
    for (int n : {5, 8, 12}) {
        SimpleGraph mop = triangulated_polygon(n);
        CHECK(mop.edge_count() == extremal(GameFamily::outerplanar(), n));
        CHECK_FALSE(is_losing(mop, GameFamily::outerplanar()));
    }
    for (int n : {7, 11, 21}) {
        SimpleGraph chain = triangle_chain(n);
        CHECK(chain.edge_count() == extremal(GameFamily::diamond_free(), n));
        CHECK_FALSE(is_losing(chain, GameFamily::diamond_free()));
    }
    for (int k : {1, 2, 3}) {
        int n = 9;
        // K_k joined to an independent set
        SimpleGraph g(n);
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
        for (int u = 0; u < k; ++u)
            for (int v = k; v < n; ++v) g.add_edge(u, v);
        CHECK(g.edge_count() == extremal(GameFamily::k_degenerate(k), n));
        CHECK_FALSE(is_losing(g, GameFamily::k_degenerate(k)));
    }
}

TEST_CASE("monotonicity: adding edges never unlooses a family") {
    Rng rng(7);
    std::vector<GameFamily> fams = {GameFamily::outerplanar(), GameFamily::diamond_free(),
                                    GameFamily::k_degenerate(2)};
    for (int trial = 0; trial < 30; ++trial) {
        SimpleGraph g = random_graph(8, 0.35, rng);
        for (const auto& fam : fams) {
            bool before = is_losing(g, fam);
            SimpleGraph h = g;
            // add the first missing edge
            bool added = false;
            for (int u = 0; u < 8 && !added; ++u)
                for (int v = u + 1; v < 8 && !added; ++v)
                    if (!h.has_edge(u, v)) {
                        h.add_edge(u, v);
                        added = true;
                    }
            if (!added) continue;
            bool after = is_losing(h, fam);
            if (before) CHECK(after);
        }
    }
}

TEST_CASE("hierarchy: diamond-free implies outerplanar implies degeneracy <= 2") {
    Rng rng(13);
    for (int trial = 0; trial < 400; ++trial) {
        SimpleGraph g = random_graph(8, 0.3, rng);
        if (is_diamond_minor_free(g)) CHECK(is_outerplanar(g));
        if (is_outerplanar(g)) CHECK(degeneracy(g).k <= 2);
    }
}

TEST_CASE("fast recognizers agree with the minor oracle on small graphs") {
    // exhaustive over all labeled graphs on 5 vertices
    for (uint64_t mask = 0; mask < (1u << 10); ++mask) {
        SimpleGraph g = graph_from_mask(5, mask);
        bool op = is_outerplanar(g);
        bool oracle_op = !has_minor_oracle(g, k4_graph()) && !has_minor_oracle(g, k23_graph());
        REQUIRE(op == oracle_op);
        bool df = is_diamond_minor_free(g);
        bool oracle_df = !has_minor_oracle(g, diamond_graph());
        REQUIRE(df == oracle_df);
    }
    // sampled 7-vertex graphs
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        SimpleGraph g = random_graph(7, 0.35, rng);
        REQUIRE(is_outerplanar(g) ==
                (!has_minor_oracle(g, k4_graph()) && !has_minor_oracle(g, k23_graph())));
        REQUIRE(is_diamond_minor_free(g) == !has_minor_oracle(g, diamond_graph()));
    }
}

TEST_CASE("edge list exchange format") {
    std::stringstream s("4 3\n0 1\n\n1 2\n2 3\n");
    SimpleGraph g = SimpleGraph::read_edge_list(s);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 2));

    std::stringstream out;
    g.write_edge_list(out);
    std::stringstream back(out.str());
    SimpleGraph h = SimpleGraph::read_edge_list(back);
    CHECK(h.edge_count() == 3);
    CHECK(h.has_edge(0, 1));
    CHECK(h.has_edge(2, 3));

    std::stringstream bad("3 1\n2 1\n");
    CHECK_THROWS_AS(SimpleGraph::read_edge_list(bad), InvalidParameter);
}
