#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperchroma/generators.hpp"
#include "hyperchroma/hypergraph.hpp"

#include "oracles.hpp"

using namespace hyperchroma;

namespace {

Hypergraph make(std::vector<VertexId> verts, std::vector<std::vector<VertexId>> edges) {
    return Hypergraph::from_edges(std::move(verts), std::move(edges));
}

}  // namespace

TEST_CASE("construction normalizes and validates") {
    Hypergraph h = make({3, 1, 2}, {{3, 2, 1}, {1, 2}});
    CHECK(h.vertices() == std::vector<VertexId>{1, 2, 3});
    CHECK(h.edges() == std::vector<std::vector<VertexId>>{{1, 2}, {1, 2, 3}});
    CHECK(!h.degenerate());
    CHECK_THROWS_AS(make({1, 2}, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(make({1, 2}, {{1, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make({1, 2}, {{1, 5}}), std::invalid_argument);
    // duplicate edges collapse
    Hypergraph d = make({1, 2, 3}, {{1, 2}, {2, 1}});
    CHECK(d.edge_count() == 1);
}

TEST_CASE("components") {
    CHECK(components(make({1, 2, 3}, {{1, 2, 3}})).count() == 1);
    ComponentPartition p = components(make({1, 2, 3}, {{1, 2}}));
    CHECK(p.count() == 2);
    CHECK(p.blocks == std::vector<std::vector<VertexId>>{{1, 2}, {3}});
    CHECK(components(make({1, 2, 3, 4, 5}, {{1, 2, 3}, {3, 4, 5}})).count() == 1);
}

TEST_CASE("delete edge") {
    Hypergraph h = make({1, 2, 3}, {{1, 2, 3}, {1, 2}});
    std::size_t big = oracle::edge_index_of(h, {1, 2, 3});
    Hypergraph d = delete_edge(h, big);
    CHECK(d.vertices() == std::vector<VertexId>{1, 2, 3});
    CHECK(d.edges() == std::vector<std::vector<VertexId>>{{1, 2}});
    CHECK(components(d).count() == 2);  // |e| - 1 for this pendant pair
    Hypergraph single = make({1, 2, 3}, {{1, 2, 3}});
    Hypergraph none = delete_edge(single, 0);
    CHECK(none.edge_count() == 0);
    CHECK(none.vertex_count() == 3);
    CHECK_THROWS_AS(delete_edge(h, 5), std::out_of_range);
}

TEST_CASE("contract set") {
    Hypergraph tri = make({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}});
    Hypergraph c = contract_set(tri, {1, 2});
    CHECK(c.vertex_count() == 2);  // {v0, 3}
    // {2,3} and {1,3} collapse to one parallel pair; {1,2} shrinks to the
    // retained singleton {v0}
    CHECK(c.edge_count() == 2);
    CHECK(c.degenerate());
    std::vector<std::size_t> sizes{c.edge(0).size(), c.edge(1).size()};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2});

    Hypergraph tree = make({1, 2, 3, 4, 5}, {{1, 2, 3}, {3, 4, 5}});
    Hypergraph c2 = contract_set(tree, {1, 2, 3});
    CHECK(c2.vertex_count() == 3);
    CHECK(c2.edge_count() == 2);  // {v0} retained alongside {v0,4,5}
    CHECK(c2.degenerate());

    Hypergraph pendant = make({1, 2, 3}, {{1, 2, 3}, {1, 2}});
    Hypergraph c3 = contract_set(pendant, {1, 2, 3});
    CHECK(c3.vertex_count() == 1);
    CHECK(c3.degenerate());  // {1,2} shrank to a single fresh vertex
    CHECK(c3.edge(0).size() == 1);

    CHECK_THROWS_AS(contract_set(tri, {1, 9}), std::invalid_argument);
}

TEST_CASE("contract edge") {
    Hypergraph tri = make({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}});
    Hypergraph c = contract_edge(tri, oracle::edge_index_of(tri, {1, 2}));
    CHECK(c.vertex_count() == 2);
    CHECK(c.edge_count() == 1);

    Hypergraph single = make({1, 2, 3}, {{1, 2, 3}});
    Hypergraph c2 = contract_edge(single, 0);
    CHECK(c2.vertex_count() == 1);
    CHECK(c2.edge_count() == 0);

    Hypergraph pendant = make({1, 2, 3}, {{1, 2, 3}, {1, 2}});
    Hypergraph c3 = contract_edge(pendant, oracle::edge_index_of(pendant, {1, 2, 3}));
    CHECK(c3.vertex_count() == 1);
    CHECK(c3.edge_count() == 1);
    CHECK(c3.degenerate());
}

TEST_CASE("contraction arithmetic invariant") {
    oracle::TinyRng rng(21);
    for (int i = 0; i < 100; ++i) {
        Hypergraph h = oracle::random_hypergraph(rng);
        if (h.edge_count() == 0) continue;
        std::size_t e = rng.below(h.edge_count());
        Hypergraph c = contract_edge(h, e);
        CHECK(c.vertex_count() == h.vertex_count() - h.edge(e).size() + 1);
        // the contracted edge's image never survives as an edge derived from itself
        for (const auto& edge : c.edges()) CHECK(edge != h.edge(e));
    }
}

TEST_CASE("join with a clique") {
    Hypergraph h = make({1, 2}, {});
    JoinResult j = join_clique(h, 1);
    CHECK(j.joined.vertex_count() == 3);
    CHECK(j.joined.edges() == std::vector<std::vector<VertexId>>{{1, 3}, {2, 3}});
    CHECK(j.apex == std::vector<VertexId>{3});

    Hypergraph tri = gen_linear_cycle(2, 3);
    for (int p = 1; p <= 3; ++p) {
        JoinResult jp = join_clique(tri, p);
        CHECK(jp.joined.vertex_count() == tri.vertex_count() + static_cast<std::size_t>(p));
        CHECK(jp.joined.edge_count() ==
              tri.edge_count() + static_cast<std::size_t>(p) * tri.vertex_count() +
                  static_cast<std::size_t>(p * (p - 1) / 2));
    }

    Hypergraph single = make({1, 2, 3}, {{1, 2, 3}});
    JoinResult j2 = join_clique(single, 2);
    CHECK(j2.joined.vertex_count() == 5);
    CHECK(j2.joined.edge_count() == 8);  // 1 + 2*3 + 1

    CHECK_THROWS_AS(join_clique(h, 0), std::invalid_argument);
}

TEST_CASE("iterated joins compose") {
    oracle::TinyRng rng(22);
    for (int i = 0; i < 30; ++i) {
        Hypergraph h = oracle::random_hypergraph(rng, 6, 4);
        CHECK(join_clique(join_clique(h, 1).joined, 1).joined == join_clique(h, 2).joined);
    }
}

TEST_CASE("girth of an edge") {
    Hypergraph c4 = gen_linear_cycle(2, 4);
    for (std::size_t e = 0; e < c4.edge_count(); ++e) {
        EdgeGirth g = girth_of_edge(c4, e);
        REQUIRE(g.length.has_value());
        CHECK(*g.length == 4);
        CHECK(is_valid_cycle(c4, *g.witness));
        CHECK(g.witness->length() == 4);
    }
    Hypergraph overlap = make({1, 2, 3, 4}, {{1, 2, 3}, {2, 3, 4}});
    EdgeGirth g = girth_of_edge(overlap, 0);
    REQUIRE(g.length.has_value());
    CHECK(*g.length == 2);
    CHECK(is_valid_cycle(overlap, *g.witness));
    Hypergraph tree = make({1, 2, 3, 4, 5}, {{1, 2, 3}, {3, 4, 5}});
    CHECK(!girth_of_edge(tree, 0).length);
    CHECK(!girth_of_edge(tree, 1).length);
}

TEST_CASE("girth") {
    CHECK(*girth(gen_linear_cycle(3, 3)) == 3);
    CHECK(*girth(gen_linear_cycle(3, 4)) == 4);
    CHECK(!girth(gen_hypertree(3, 3, 7)));
}

TEST_CASE("girth matches exhaustive cycle enumeration") {
    oracle::TinyRng rng(23);
    int cyclic_seen = 0;
    for (int i = 0; i < 120; ++i) {
        Hypergraph h = oracle::random_hypergraph(rng, 7, 6);
        auto expect = oracle::girth(h);
        auto got = girth(h);
        CHECK(got == expect);
        if (expect) ++cyclic_seen;
        for (std::size_t e = 0; e < h.edge_count(); ++e) {
            if (h.edge(e).size() < 2) continue;
            EdgeGirth eg = girth_of_edge(h, e);
            auto oe = oracle::shortest_cycle_through(h, e);
            CHECK(eg.length == oe);
            if (eg.length) CHECK(is_valid_cycle(h, *eg.witness));
        }
    }
    CHECK(cyclic_seen > 20);  // the corpus exercises the cyclic path
}

TEST_CASE("shortest cycle census") {
    CycleCensus c4 = shortest_cycle_census(gen_linear_cycle(2, 4));
    CHECK(c4.length == 4);
    CHECK(c4.count == 1);

    Hypergraph k4 = gen_complete(4);
    // keep only the 2-edges of the complete hypergraph to get the graph K_4
    std::vector<std::vector<VertexId>> pairs;
    for (const auto& e : k4.edges())
        if (e.size() == 2) pairs.push_back(e);
    Hypergraph graph_k4 = make({1, 2, 3, 4}, pairs);
    CycleCensus ck4 = shortest_cycle_census(graph_k4);
    CHECK(ck4.length == 3);
    CHECK(ck4.count == 4);

    CycleCensus c3 = shortest_cycle_census(gen_linear_cycle(3, 3));
    CHECK(c3.length == 3);
    CHECK(c3.count == 1);

    CHECK_THROWS_AS(shortest_cycle_census(gen_hypertree(3, 2, 1)), std::invalid_argument);
}

TEST_CASE("census matches exhaustive enumeration") {
    oracle::TinyRng rng(24);
    for (int i = 0; i < 80; ++i) {
        Hypergraph h = oracle::random_hypergraph(rng, 7, 6);
        auto g = girth(h);
        if (!g) continue;
        CycleCensus census = shortest_cycle_census(h);
        auto sets = oracle::cycle_edge_sets(h, static_cast<std::size_t>(*g));
        CHECK(census.count == static_cast<long long>(sets.size()));
        for (const auto& w : census.witnesses) CHECK(sets.count(w) == 1);
    }
}

TEST_CASE("coloring number") {
    std::vector<std::vector<VertexId>> k4_edges;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) k4_edges.push_back({i, j});
    CHECK(coloring_number(make({1, 2, 3, 4}, k4_edges)) == 4);
    CHECK(coloring_number(gen_linear_cycle(2, 4)) == 3);
    CHECK(coloring_number(make({1, 2, 3}, {{1, 2, 3}})) == 3);
}

TEST_CASE("coloring number equals subset degeneracy + 1") {
    oracle::TinyRng rng(25);
    for (int i = 0; i < 60; ++i) {
        Hypergraph h = oracle::random_hypergraph(rng, 8, 6);
        CHECK(coloring_number(h) == oracle::degeneracy_by_subsets(h) + 1);
    }
}

TEST_CASE("classification") {
    CHECK(classify(make({1, 2, 3, 4, 5}, {{1, 2, 3}, {3, 4, 5}})).linear);
    CHECK(*classify(make({1, 2, 3, 4, 5}, {{1, 2, 3}, {3, 4, 5}})).uniform_rank == 3);
    Classification c = classify(make({1, 2, 3, 4}, {{1, 2, 3}, {2, 3, 4}}));
    CHECK(!c.linear);
    CHECK(*c.uniform_rank == 3);
    // {1,2,3} and {1,2} share two vertices, so the pair is not linear
    Classification m = classify(make({1, 2, 3}, {{1, 2, 3}, {1, 2}}));
    CHECK(!m.linear);
    CHECK(!m.uniform_rank);
}

TEST_CASE("generators") {
    Hypergraph c34 = gen_linear_cycle(3, 4);
    CHECK(c34.vertex_count() == 8);
    CHECK(c34.edge_count() == 4);
    CHECK(classify(c34).linear);
    CHECK(*classify(c34).uniform_rank == 3);
    CHECK(c34.find_edge({1, 2, 3}).has_value());
    CHECK(c34.find_edge({1, 7, 8}).has_value());

    Hypergraph tree = gen_hypertree(3, 2, 42);
    CHECK(tree.vertex_count() == 5);
    CHECK(tree.edge_count() == 2);
    CHECK(!girth(tree));
    CHECK(components(tree).count() == 1);

    Hypergraph theta = gen_theta(2, 1, 3);
    CHECK(theta.vertex_count() == 4);
    CHECK(theta.edge_count() == 4);
    CHECK(*girth(theta) == 4);

    Hypergraph comp = gen_complete(3);
    CHECK(comp.edge_count() == 4);  // three pairs plus the triple
    CHECK(!comp.degenerate());
    Hypergraph comps = gen_complete(3, true);
    CHECK(comps.edge_count() == 7);
    CHECK(comps.degenerate());

    Hypergraph joined = generate_instance("join:2:cycle:2:3");
    CHECK(joined.vertex_count() == 5);
    CHECK(joined.edge_count() == 3 + 6 + 1);

    CHECK_THROWS_AS(generate_instance("cycle:2"), std::invalid_argument);
    CHECK_THROWS_AS(generate_instance("nope:1:2"), std::invalid_argument);
    CHECK_THROWS_AS(gen_theta(2, 1, 1), std::invalid_argument);
}

TEST_CASE("theta family realizes prescribed even edge girths") {
    for (int l2 : {3, 5}) {
        Hypergraph th = gen_theta(2, 1, l2);
        std::size_t short_edge = oracle::edge_index_of(th, {1, 2});
        EdgeGirth eg = girth_of_edge(th, short_edge);
        REQUIRE(eg.length.has_value());
        CHECK(*eg.length == 1 + l2);
    }
    Hypergraph th3 = gen_theta(3, 2, 2);
    CHECK(classify(th3).linear);
    CHECK(*girth(th3) == 4);
}
