#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "copwin/corpus.hpp"
#include "copwin/io.hpp"
#include "test_util.hpp"

using namespace copwin;
using namespace testutil;

TEST_CASE("edge list round trip") {
    for (const Graph& g : {p3(), c4(), k4(), fixture_sun3(), fixture_gk(2)}) {
        std::string text = format_edge_list(g);
        CHECK(parse_edge_list(text) == g);
        CHECK(format_edge_list(parse_edge_list(text)) == text);
    }
    // Comments and blank lines are accepted on input.
    Graph g = parse_edge_list("# a triangle\n\n3 3\n0 1\n# middle\n1 2\n0 2\n");
    CHECK(g == fixture_complete(3));
}

TEST_CASE("edge list errors") {
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n"), ParseError);          // missing edge
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 1\n0 1\n"), ParseError);  // extra edge
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 1 junk\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), GraphBuildError);
}

TEST_CASE("graph6 codec") {
    CHECK(to_graph6(k4()) == "C~");
    CHECK(to_graph6(fixture_complete(2)) == "A_");
    CHECK(parse_graph6("C~") == k4());
    CHECK(parse_graph6(">>graph6<<A_") == fixture_complete(2));
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);

    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : sample_connected(n, 30, 17 * n + 1))
            CHECK(parse_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("format auto-detection") {
    auto from_edges = parse_graphs("3 2\n0 1\n1 2\n");
    REQUIRE(from_edges.size() == 1);
    CHECK(from_edges[0] == p3());

    auto from_g6 = parse_graphs(to_graph6(c4()) + "\n" + to_graph6(k4()) + "\n");
    REQUIRE(from_g6.size() == 2);
    CHECK(from_g6[0] == c4());
    CHECK(from_g6[1] == k4());

    CHECK_THROWS_AS(parse_graphs(""), ParseError);
}

TEST_CASE("json emitters carry schemas") {
    auto cert = ss_dismantle(k4(), Radius(1), Radius(1));
    REQUIRE(cert.has_value());
    CHECK(json_certificate(*cert).find("copwin.certificate/1") != std::string::npos);
    CHECK(json_no_certificate("mno").find("\"found\":false") != std::string::npos);

    auto d = big_brother(fixture_star(3));
    REQUIRE(d.has_value());
    CHECK(json_decomposition(*d).find("copwin.decomposition/1") != std::string::npos);

    GameValue v = solve_visible(p3(), Radius(1), Radius(1));
    std::string summary = json_game_summary(v, false);
    CHECK(summary.find("\"verdict\":\"COP\"") != std::string::npos);
    std::string full = json_game_summary(v, true);
    CHECK(full.find("\"label\"") != std::string::npos);

    CHECK(json_hyperbolicity(hyperbolicity(c4())).find("\"two_delta\":2") != std::string::npos);
}
