#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "copwin/corpus.hpp"
#include "copwin/hyperbolicity.hpp"
#include "test_util.hpp"

using namespace copwin;
using namespace testutil;

TEST_CASE("four point report") {
    auto rep = four_point(c4(), 0, 2, 1, 3);
    CHECK(rep.sums == std::array<int, 3>{4, 2, 2});
    CHECK(rep.two_xi == 2);
    CHECK(rep.two_eta == 2);

    // Tree quadruples are flat.
    Graph p = fixture_path(7);
    for (int u = 0; u < 7; ++u)
        for (int v = 0; v < 7; ++v) CHECK(four_point(p, u, v, (u + 2) % 7, (v + 3) % 7).two_xi == 0);

    // Repeated vertices degenerate but stay finite.
    auto degen = four_point(p3(), 0, 0, 1, 2);
    CHECK(degen.two_xi == 0);
    CHECK(degen.two_eta == 2);

    CHECK_THROWS_AS(four_point(p3(), 0, 1, 2, 3), ParamError);
}

TEST_CASE("exact hyperbolicity values") {
    CHECK(hyperbolicity(fixture_path(5)).two_delta == 0);
    CHECK(hyperbolicity(fixture_star(5)).two_delta == 0);
    CHECK(hyperbolicity(fixture_complete(5)).two_delta == 0);

    auto c4rep = hyperbolicity(c4());
    CHECK(c4rep.two_delta == 2);
    CHECK(c4rep.witness == std::array<int, 4>{0, 1, 2, 3});

    CHECK(hyperbolicity(c5()).two_delta == 1);
    CHECK(hyperbolicity(c6()).two_delta == 2);
}

TEST_CASE("relabeling invariance") {
    std::mt19937_64 rng(5);
    for (const Graph& g : sample_connected(7, 20, 99)) {
        std::vector<int> perm(7);
        for (int i = 0; i < 7; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(hyperbolicity(g).two_delta == hyperbolicity(relabel(g, perm)).two_delta);
    }
}

TEST_CASE("thin graphs admit the derived elimination") {
    CHECK(check_hyperbolic_dismantling(fixture_path(6), 1));
    CHECK(check_hyperbolic_dismantling(fixture_star(4), 1));
    CHECK(check_hyperbolic_dismantling(c4(), 2));
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : sample_connected(n, 25, 7 + n)) {
            int r = std::max(1, hyperbolicity(g).two_delta);
            CHECK(check_hyperbolic_dismantling(g, r));
        }
    }
}

TEST_CASE("hypothesis guard") {
    CHECK_THROWS_AS(check_hyperbolic_dismantling(c4(), 0), ParamError);
    // 2*delta of the 8-cycle is 4; r = 1 violates 2r >= 2*delta.
    Graph c8 = fixture_cycle(8);
    CHECK(hyperbolicity(c8).two_delta == 4);
    CHECK_THROWS_AS(check_hyperbolic_dismantling(c8, 1), ParamError);
    CHECK(check_hyperbolic_dismantling(c8, 2));
}
