#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "copwin/corpus.hpp"
#include "copwin/game.hpp"
#include "minimax_oracle.hpp"
#include "test_util.hpp"

using namespace copwin;
using namespace testutil;

TEST_CASE("visible game on the path and the cycle") {
    GameValue p = solve_visible(p3(), Radius(1), Radius(1));
    CHECK(p.verdict == Player::Cop);

    // Frozen against the bounded-minimax oracle.
    CHECK_FALSE(oracle_cop_wins(c4(), GameSpec::visible(Radius(1), Radius(1))));
    GameValue c = solve_visible(c4(), Radius(1), Radius(1));
    CHECK(c.verdict == Player::Robber);
    CHECK(c.best_start == -1);
}

TEST_CASE("fast robber beats a slow cop on the sun") {
    CHECK(solve_visible(fixture_sun3(), Radius(2), Radius(1)).verdict == Player::Robber);
    CHECK(solve_visible(fixture_sun3(), Radius(1), Radius(1)).verdict == Player::Cop);
}

TEST_CASE("solver matches the minimax oracle on every small graph") {
    for (int n = 1; n <= 4; ++n) {
        for_each_connected(n, [&](const Graph& g) {
            for (auto [s, sp] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
                GameSpec spec = GameSpec::visible(Radius(s), Radius(sp));
                CHECK((solve_visible(g, Radius(s), Radius(sp)).verdict == Player::Cop) ==
                      oracle_cop_wins(g, spec));
            }
            GameSpec cap1 = GameSpec::capture(1);
            CHECK((solve_capture(g, 1).verdict == Player::Cop) == oracle_cop_wins(g, cap1));
        });
    }
}

TEST_CASE("a strictly faster cop always wins") {
    for (int n = 1; n <= 4; ++n) {
        for_each_connected(n, [&](const Graph& g) {
            CHECK(solve_visible(g, Radius(1), Radius(2)).verdict == Player::Cop);
            CHECK(solve_visible(g, Radius(2), Radius(3)).verdict == Player::Cop);
        });
    }
}

TEST_CASE("witness game fixtures") {
    Graph sun = fixture_sun3();
    for (int k : {2, 3, 4}) CHECK(solve_witness(sun, k).verdict == Player::Cop);

    Graph g2 = fixture_gk(2);
    CHECK(solve_witness(g2, 2).verdict == Player::Cop);
    CHECK(solve_witness(g2, 3).verdict == Player::Robber);

    Graph star = fixture_star(4);
    for (int k : {1, 2, 5, 8}) CHECK(solve_witness(star, k).verdict == Player::Cop);
}

TEST_CASE("witness guards") {
    Graph g = p3();
    CHECK_THROWS_AS(solve_witness(g, 9), ParamError);
    CHECK_NOTHROW(solve_witness(g, 9, Radius(1), true));
    CHECK_THROWS_AS(solve_witness(g, 0), ParamError);
    Graph big = fixture_path(25);
    CHECK_THROWS_AS(solve_witness(big, 2), ParamError);
    Graph disc = Graph::build(2, std::initializer_list<Edge>{});
    CHECK_THROWS_AS(solve_witness(disc, 2), DisconnectedError);
    CHECK_THROWS_AS(solve_visible(disc, Radius(1), Radius(1)), DisconnectedError);
    CHECK_THROWS_AS(solve_capture(disc, 1), DisconnectedError);
}

TEST_CASE("capture-radius game") {
    CHECK(solve_capture(c4(), 1).verdict == Player::Cop);

    CHECK_FALSE(oracle_cop_wins(c6(), GameSpec::capture(1)));
    CHECK(solve_capture(c6(), 1).verdict == Player::Robber);

    // Radius at least the diameter is an instant win.
    for (const Graph& g : {c6(), fixture_path(5), fixture_complete(4)})
        CHECK(solve_capture(g, g.diameter()).verdict == Player::Cop);
}

TEST_CASE("one-move witness phases collapse to the visible game") {
    for (int n = 1; n <= 4; ++n) {
        for_each_connected(n, [&](const Graph& g) {
            for (int s : {1, 2}) {
                CHECK(solve_witness(g, 1, Radius(s)).verdict ==
                      solve_visible(g, Radius(s), Radius(1)).verdict);
            }
        });
    }
}

TEST_CASE("solving is deterministic") {
    GameValue a = solve_visible(c5(), Radius(2), Radius(1));
    GameValue b = solve_visible(c5(), Radius(2), Radius(1));
    CHECK(a.winner == b.winner);
    CHECK(a.label == b.label);

    GameValue wa = solve_witness(fixture_sun3(), 3);
    GameValue wb = solve_witness(fixture_sun3(), 3);
    CHECK(wa.winner == wb.winner);
    CHECK(wa.label == wb.label);
}

TEST_CASE("labels decrease along cop-optimal play") {
    for (const Graph& g : {p4(), fixture_star(3), fixture_two_triangles_shared_edge()}) {
        GameValue v = solve_visible(g, Radius(1), Radius(1));
        REQUIRE(v.verdict == Player::Cop);
        OptimalPolicies pol(g, v);
        for (int c = 0; c < v.n; ++c) {
            for (int r = 0; r < v.n; ++r) {
                if (c == r || v.label_at(c, r) <= 0) continue;
                int dest = pol.cop_move(c, r);
                for (int r2 : robber_replies(g, GameSpec::visible(Radius(1), Radius(1)), dest, r))
                    CHECK(v.label_at(dest, r2) < v.label_at(c, r));
            }
        }
    }
}

TEST_CASE("parsimonious cop move lands on an adjacent robber") {
    GameValue v = solve_visible(p3(), Radius(1), Radius(1));
    OptimalPolicies pol(p3(), v);
    CHECK(pol.cop_move(1, 0) == 0);
    CHECK(pol.cop_move(1, 2) == 2);
}

TEST_CASE("optimal witness plan on the sun oscillates the refuge neighbors") {
    Graph sun = fixture_sun3();
    GameValue v = solve_witness(sun, 2);
    REQUIRE(v.verdict == Player::Cop);
    OptimalPolicies pol(sun, v);
    // Cop on the inner vertex 0; the only non-adjacent refuge is corner 4,
    // whose neighbors are the inner vertices 1 and 2.
    CHECK(pol.cop_plan(0, 4) == std::vector<int>{1, 2});
}
