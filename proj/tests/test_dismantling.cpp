#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "copwin/corpus.hpp"
#include "copwin/dismantling.hpp"
#include "copwin/game.hpp"
#include "test_util.hpp"

using namespace copwin;
using namespace testutil;

namespace {

// Exhaustive elimination-order search written independently of the library's
// memoized backtracker: plain recursion over remaining sets.
bool brute_force_bidismantlable(const Graph& g, int k, std::vector<int> remaining) {
    if (remaining.size() <= 1) return true;
    for (size_t vi = 0; vi < remaining.size(); ++vi) {
        int v = remaining[vi];
        for (int y : remaining) {
            if (y == v) continue;
            for (int x : remaining) {
                if (x == v || (x != y && !g.adjacent(x, y))) continue;
                bool ok = true;
                for (int z : punctured_ball2(g, v, Radius(k), x, y)) {
                    bool in_rem =
                        std::find(remaining.begin(), remaining.end(), z) != remaining.end();
                    if (in_rem && z != y && !g.adjacent(z, y)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                std::vector<int> rest = remaining;
                rest.erase(rest.begin() + vi);
                if (brute_force_bidismantlable(g, k, rest)) return true;
            }
        }
    }
    return false;
}

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> v(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) v[i] = i;
    return v;
}

}  // namespace

TEST_CASE("speed-pair elimination on the easy fixtures") {
    for (auto [s, sp] : {std::pair{1, 1}, {2, 2}, {3, 1}}) {
        auto cert = ss_dismantle(k4(), Radius(s), Radius(sp));
        REQUIRE(cert.has_value());
        CHECK(verify_certificate(k4(), *cert));
    }
    CHECK(ss_dismantle(k4(), Radius::unbounded(), Radius(1)).has_value());

    CHECK_FALSE(ss_dismantle(c4(), Radius(1), Radius(1)).has_value());
    CHECK(solve_visible(c4(), Radius(1), Radius(1)).verdict == Player::Robber);

    CHECK_FALSE(ss_dismantle(fixture_sun3(), Radius(2), Radius(1)).has_value());
    CHECK(ss_dismantle(fixture_sun3(), Radius(1), Radius(1)).has_value());

    // Trees peel leaf by leaf even against an unbounded-speed robber.
    for (const Graph& tree : {fixture_path(6), fixture_star(4)}) {
        auto cert = ss_dismantle(tree, Radius::unbounded(), Radius(1));
        REQUIRE(cert.has_value());
        CHECK(verify_certificate(tree, *cert));
    }
}

TEST_CASE("induced-subgraph variant agrees with the ambient one") {
    CHECK(ss_dismantle_local(k4(), Radius(2)).has_value());
    CHECK_FALSE(ss_dismantle_local(c4(), Radius(1)).has_value());
    CHECK_FALSE(ss_dismantle_local(fixture_sun3(), Radius(2)).has_value());
    for (int n = 1; n <= 5; ++n) {
        for_each_connected(n, [&](const Graph& g) {
            for (Radius s : {Radius(1), Radius(2), Radius(3), Radius::unbounded()}) {
                auto global = ss_dismantle(g, s, Radius(1));
                auto local = ss_dismantle_local(g, s);
                CHECK(global.has_value() == local.has_value());
                if (local) CHECK(verify_certificate(g, *local));
            }
        });
    }
}

TEST_CASE("maximum-neighborhood orders") {
    auto star_cert = mno_order(fixture_star(3));
    REQUIRE(star_cert.has_value());
    CHECK(verify_certificate(fixture_star(3), *star_cert));
    CHECK_FALSE(mno_order(fixture_sun3()).has_value());
    CHECK_FALSE(mno_order(c4()).has_value());
}

TEST_CASE("bipartite elimination") {
    Graph k33 = fixture_complete_bipartite(3, 3);
    auto cert = bipartite_dismantle(k33);
    REQUIRE(cert.has_value());
    CHECK(verify_certificate(k33, *cert));

    CHECK_FALSE(bipartite_dismantle(c6()).has_value());
    CHECK(solve_capture(c6(), 1).verdict == Player::Robber);

    auto p4cert = bipartite_dismantle(p4());
    REQUIRE(p4cert.has_value());
    CHECK(verify_certificate(p4(), *p4cert));

    CHECK_THROWS_AS(bipartite_dismantle(c5()), ParamError);
    CHECK_THROWS_AS(bipartite_dismantle(Graph::build(2, std::initializer_list<Edge>{})),
                    DisconnectedError);
}

TEST_CASE("pair eliminations") {
    Graph sun = fixture_sun3();
    auto sun_cert = bidismantle(sun, 2);
    REQUIRE(sun_cert.has_value());
    CHECK(verify_certificate(sun, *sun_cert));

    Graph k3 = fixture_complete(3);
    for (int k : {1, 2, 5}) CHECK(bidismantle(k3, k).has_value());

    // Frozen against the plain recursive search over all orders.
    CHECK_FALSE(brute_force_bidismantlable(c5(), 2, all_vertices(c5())));
    CHECK_FALSE(bidismantle(c5(), 2).has_value());

    for (int n = 2; n <= 5; ++n) {
        for_each_connected(n, [&](const Graph& g) {
            CHECK(bidismantle(g, 2).has_value() ==
                  brute_force_bidismantlable(g, 2, all_vertices(g)));
        });
    }
}

TEST_CASE("strong pair elimination") {
    auto star_cert = strong_bidismantle(fixture_star(3));
    REQUIRE(star_cert.has_value());
    CHECK(verify_certificate(fixture_star(3), *star_cert));
    CHECK(strong_bidismantle(k4()).has_value());
    CHECK_FALSE(strong_bidismantle(c5()).has_value());
}

TEST_CASE("verification rejects broken certificates") {
    auto cert = ss_dismantle(k4(), Radius(1), Radius(1));
    REQUIRE(cert.has_value());
    CHECK(verify_certificate(k4(), *cert));

    // Reversing the order makes every eliminator precede its vertex.
    EliminationCertificate reversed = *cert;
    std::reverse(reversed.order.begin(), reversed.order.end());
    CHECK_FALSE(verify_certificate(k4(), reversed));

    EliminationCertificate dup = *cert;
    dup.order[0] = dup.order[1];
    CHECK_THROWS_AS(verify_certificate(k4(), dup), MalformedError);

    EliminationCertificate oob = *cert;
    oob.elim_y[0] = 99;
    CHECK_THROWS_AS(verify_certificate(k4(), oob), MalformedError);

    auto sun_cert = bidismantle(fixture_sun3(), 2);
    REQUIRE(sun_cert.has_value());
    CHECK(verify_certificate(fixture_sun3(), *sun_cert));
}

TEST_CASE("randomized eliminations reach a singleton exactly when greedy does") {
    std::mt19937_64 rng(20240801);
    for (int n = 2; n <= 5; ++n) {
        for_each_connected(n, [&](const Graph& g) {
            for (auto [s, sp] : {std::pair{1, 1}, {2, 1}}) {
                Radius rs(s), rsp(sp);
                bool canonical = ss_dismantle(g, rs, rsp).has_value();
                for (int trial = 0; trial < 20; ++trial) {
                    std::vector<int> alive = all_vertices(g);
                    bool stuck = false;
                    while (alive.size() > 1 && !stuck) {
                        std::vector<std::pair<int, int>> valid;
                        for (int v : alive) {
                            for (int u : alive) {
                                if (u == v) continue;
                                bool ok = true;
                                for (int z : punctured_ball(g, v, rs, u)) {
                                    bool in_alive = std::find(alive.begin(), alive.end(), z) !=
                                                    alive.end();
                                    if (in_alive && !rsp.admits(g.distance(u, z))) {
                                        ok = false;
                                        break;
                                    }
                                }
                                if (ok) valid.push_back({v, u});
                            }
                        }
                        if (valid.empty()) {
                            stuck = true;
                        } else {
                            auto [v, u] = valid[rng() % valid.size()];
                            alive.erase(std::find(alive.begin(), alive.end(), v));
                        }
                    }
                    CHECK((alive.size() == 1) == canonical);
                }
            }
        });
    }
}
