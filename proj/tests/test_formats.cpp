#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kitefree/formats.hpp"
#include "kitefree/patterns.hpp"
#include "test_util.hpp"

using namespace kitefree;
using testutil::random_graph;

TEST_CASE("graph6 known encodings")
{
    // standard encoding: upper triangle column-major, 6-bit groups + 63
    CHECK(to_graph6(complete_graph(5)) == "D~{");
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");
    CHECK(to_graph6(Graph(0, {})) == "?");
    CHECK(to_graph6(Graph(1, {})) == "@");
    CHECK(to_graph6(Graph(5, {})) == "D??");
}

TEST_CASE("graph6 parse errors")
{
    CHECK_THROWS_AS(from_graph6(""), ParseError);
    CHECK_THROWS_AS(from_graph6("D~"), ParseError);      // truncated bits
    CHECK_THROWS_AS(from_graph6("D~{x"), ParseError);    // trailing junk
    CHECK_THROWS_AS(from_graph6(std::string(1, char(20))), ParseError);
}

TEST_CASE("graph6 round trip")
{
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 200; ++it) {
        int n = int(rng() % 20);
        Graph g = random_graph(n, 0.4, rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    // multi-byte vertex count path
    Graph big = random_graph(70, 0.1, rng);
    CHECK(from_graph6(to_graph6(big)) == big);
}

TEST_CASE("dimacs round trip and 1-indexing")
{
    Graph c5 = cycle_graph(5);
    std::string text = to_dimacs(c5);
    CHECK(text.find("p edge 5 5") == 0);
    CHECK(text.find("e 1 2") != std::string::npos);
    CHECK(from_dimacs(text) == c5);

    CHECK(from_dimacs("c comment\np edge 3 1\ne 1 3\n") == Graph(3, {{0, 2}}));
    CHECK_THROWS_AS(from_dimacs("e 1 2\n"), ParseError);
    CHECK_THROWS_AS(from_dimacs("p edge 2 1\ne 1 3\n"), ParseError);
}

TEST_CASE("edge list round trip")
{
    Graph g(4, {{0, 1}, {2, 3}});
    CHECK(from_edge_list(to_edge_list(g)) == g);
    CHECK_THROWS_AS(from_edge_list("2\n0\n"), ParseError);
    CHECK_THROWS_AS(from_edge_list("2\n0 5\n"), ParseError);
}

TEST_CASE("format autodetection")
{
    CHECK(format_from_extension("x.g6") == GraphFormat::graph6);
    CHECK(format_from_extension("dir/y.col") == GraphFormat::dimacs);
    CHECK(format_from_extension("z.txt") == GraphFormat::edge_list);
    CHECK_FALSE(format_from_extension("noext").has_value());
}
