#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "copwin/corpus.hpp"
#include "copwin/graph.hpp"
#include "test_util.hpp"

using namespace copwin;
using namespace testutil;

TEST_CASE("build validates and computes distances") {
    Graph g = p3();
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.distance(0, 2) == 2);
    CHECK(c4().distance(0, 2) == 2);

    CHECK_THROWS_AS(Graph::build(2, {{0, 0}}), GraphBuildError);
    CHECK_THROWS_AS(Graph::build(2, {{0, 1}, {1, 0}}), GraphBuildError);
    CHECK_THROWS_AS(Graph::build(2, {{0, 2}}), GraphBuildError);
    try {
        Graph::build(2, {{0, 0}});
    } catch (const GraphBuildError& e) {
        CHECK(e.kind() == GraphBuildError::Kind::SelfLoop);
    }
}

TEST_CASE("balls and punctured balls") {
    Graph g = p3();
    CHECK(ball(g, 0, Radius(1)) == VertexSet{0, 1});
    CHECK(ball(c4(), 0, Radius(2)) == VertexSet{0, 1, 2, 3});
    CHECK(ball(g, 0, Radius::unbounded()) == VertexSet{0, 1, 2});

    CHECK(punctured_ball(g, 0, Radius(2), 1) == VertexSet{0});
    CHECK(punctured_ball(c4(), 0, Radius(2), 1) == VertexSet{0, 2, 3});
    CHECK(punctured_ball(g, 2, Radius::unbounded(), 1) == VertexSet{2});
    CHECK_THROWS_AS(punctured_ball(g, 1, Radius(1), 1), ParamError);
}

TEST_CASE("connectivity and components") {
    CHECK(is_connected(p3()));
    CHECK(is_connected(k4()));
    Graph two = Graph::build(2, std::initializer_list<Edge>{});
    CHECK_FALSE(is_connected(two));
    CHECK(components(two).size() == 2);
    CHECK(components(p3()).size() == 1);
}

TEST_CASE("bipartition") {
    auto bp = bipartition(c4());
    REQUIRE(bp.has_value());
    CHECK(bp->first == VertexSet{0, 2});
    CHECK(bp->second == VertexSet{1, 3});
    CHECK_FALSE(bipartition(c5()).has_value());
    auto p4bp = bipartition(p4());
    REQUIRE(p4bp.has_value());
    CHECK(p4bp->first == VertexSet{0, 2});
    CHECK(p4bp->second == VertexSet{1, 3});
}

TEST_CASE("blocks and articulation points") {
    auto bct = blocks_and_articulations(p3());
    REQUIRE(bct.blocks.size() == 2);
    CHECK(bct.blocks[0] == VertexSet{0, 1});
    CHECK(bct.blocks[1] == VertexSet{1, 2});
    CHECK(bct.articulations == VertexSet{1});

    auto k4bct = blocks_and_articulations(k4());
    CHECK(k4bct.blocks.size() == 1);
    CHECK(k4bct.articulations.empty());

    auto tt = blocks_and_articulations(two_triangles_shared_vertex());
    CHECK(tt.blocks.size() == 2);
    CHECK(tt.articulations == VertexSet{0});

    CHECK_THROWS_AS(blocks_and_articulations(Graph::build(2, std::initializer_list<Edge>{})),
                    DisconnectedError);
}

TEST_CASE("block structure forms a tree covering all edges") {
    for (int n = 2; n <= 6; ++n) {
        for_each_connected(n, [&](const Graph& g) {
            auto bct = blocks_and_articulations(g);
            size_t edge_total = 0;
            for (const auto& b : bct.blocks) {
                Graph sub = induced_subgraph(g, b);
                edge_total += sub.edge_count();
            }
            CHECK(edge_total == static_cast<size_t>(g.edge_count()));
            // Tree: |blocks| + |cutpoints| - 1 edges in the block-cut graph.
            CHECK(bct.tree_edges.size() ==
                  bct.blocks.size() + bct.articulations.size() - 1);
        });
    }
}

TEST_CASE("dominating vertex") {
    VertexSet all4{0, 1, 2, 3};
    CHECK(dominating_vertex(k4(), all4) == 0);
    CHECK_FALSE(dominating_vertex(c4(), all4).has_value());
    Graph star = fixture_star(3);
    VertexSet allstar{0, 1, 2, 3};
    CHECK(dominating_vertex(star, allstar) == 0);
    CHECK_THROWS_AS(dominating_vertex(k4(), VertexSet{}), ParamError);
}

TEST_CASE("punctured ball properties on small graphs") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 5; ++n) {
        for_each_connected(n, [&](const Graph& g) {
            for (int x = 0; x < n; ++x) {
                for (int y = 0; y < n; ++y) {
                    if (x == y) continue;
                    VertexSet prev;
                    for (int r = 0; r <= n; ++r) {
                        auto cur = punctured_ball(g, x, Radius(r), y);
                        // Monotone in r.
                        CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
                        // Contained in the plain ball, never holds y.
                        auto b = ball(g, x, Radius(r));
                        CHECK(std::includes(b.begin(), b.end(), cur.begin(), cur.end()));
                        CHECK(!std::binary_search(cur.begin(), cur.end(), y));
                        CHECK(std::binary_search(cur.begin(), cur.end(), x));
                        prev = cur;
                    }
                    // Unbounded radius = component of x in the punctured graph.
                    auto unb = punctured_ball(g, x, Radius::unbounded(), y);
                    VertexSet rest;
                    for (int v = 0; v < n; ++v)
                        if (v != y) rest.push_back(v);
                    Graph del = induced_subgraph(g, rest);
                    int xi = static_cast<int>(
                        std::lower_bound(rest.begin(), rest.end(), x) - rest.begin());
                    VertexSet comp;
                    for (size_t i = 0; i < rest.size(); ++i)
                        if (del.reaches(xi, static_cast<int>(i))) comp.push_back(rest[i]);
                    CHECK(unb == comp);
                }
            }
        });
    }
}

TEST_CASE("radius ordering and parsing") {
    CHECK(Radius::unbounded() > Radius(1000000));
    CHECK(Radius(2) < Radius(3));
    CHECK(Radius(2) <= Radius(2));
    CHECK(Radius::unbounded() == Radius::unbounded());
    CHECK(Radius::parse("inf").is_unbounded());
    CHECK(Radius::parse("4") == Radius(4));
    CHECK_THROWS_AS(Radius::parse("-1"), ParamError);
    CHECK_THROWS_AS(Radius::parse("2x"), ParamError);
    CHECK(Radius::unbounded().admits(1 << 20));
    CHECK_FALSE(Radius(3).admits(4));
}

TEST_CASE("relabel keeps the metric") {
    Graph g = c5();
    std::vector<int> perm{3, 0, 4, 1, 2};
    Graph h = relabel(g, perm);
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v) CHECK(g.distance(u, v) == h.distance(perm[u], perm[v]));
}
