#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kitefree/oracle.hpp"
#include "kitefree/patterns.hpp"
#include "test_util.hpp"

using namespace kitefree;
using testutil::exhaustive_chromatic_number;
using testutil::random_graph;

namespace {

Graph nc5bar(int n) // join of n copies of complement(C5), labels grouped by factor
{
    Graph g = complement(cycle_graph(5));
    for (int i = 1; i < n; ++i)
        g = compose(Compose::join, g, complement(cycle_graph(5)));
    return g;
}

} // namespace

TEST_CASE("k_colorable fixed cases")
{
    CHECK_FALSE(k_colorable(complete_graph(6), 5).has_value());
    CHECK(k_colorable(cycle_graph(5), 3).has_value());

    Graph c9b = cycle_complement(9);
    CHECK_FALSE(k_colorable(c9b, 4).has_value());
    auto five = k_colorable(c9b, 5);
    REQUIRE(five.has_value());
    CHECK(is_proper(c9b, *five));

    CHECK_THROWS_AS(k_colorable(Graph(41, {}), 2), BoundError);
}

TEST_CASE("returned colorings pass the independent recheck")
{
    std::mt19937_64 rng(9);
    for (int it = 0; it < 60; ++it) {
        int n = 1 + int(rng() % 10);
        Graph g = random_graph(n, 0.5, rng);
        int chi = chromatic_number(g);
        auto c = k_colorable(g, chi);
        REQUIRE(c.has_value());
        CHECK(is_proper(g, *c));
        CHECK(c->colors_used() <= chi);
    }
}

TEST_CASE("chromatic_number fixed cases")
{
    CHECK(chromatic_number(Graph(0, {})) == 0);
    CHECK(chromatic_number(complete_graph(1)) == 1);
    // tightness family: chi = 3n (+1 with apex)
    CHECK(chromatic_number(compose(Compose::join, nc5bar(2), complete_graph(1))) == 7);
    CHECK(chromatic_number(nc5bar(3)) == 9);
}

TEST_CASE("clique_number fixed cases")
{
    CHECK(clique_number(nc5bar(2)) == 4);
    CHECK(clique_number(compose(Compose::join, nc5bar(2), complete_graph(1))) == 5);
    CHECK(clique_number(cycle_graph(5)) == 2);
    Graph g = nc5bar(2);
    CHECK(is_clique(g, max_clique(g)));
}

TEST_CASE("two chromatic oracles agree on small graphs")
{
    std::mt19937_64 rng(123);
    for (int it = 0; it < 120; ++it) {
        int n = int(rng() % 8);
        Graph g = random_graph(n, 0.2 + 0.1 * double(rng() % 7), rng);
        CHECK(chromatic_number(g) == exhaustive_chromatic_number(g));
    }
}

TEST_CASE("chi >= omega and k-colorability is monotone")
{
    std::mt19937_64 rng(321);
    for (int it = 0; it < 60; ++it) {
        int n = 1 + int(rng() % 9);
        Graph g = random_graph(n, 0.5, rng);
        int chi = chromatic_number(g);
        CHECK(chi >= clique_number(g));
        for (int k = 0; k <= n + 1; ++k)
            CHECK(k_colorable(g, k).has_value() == (k >= chi));
    }
}

TEST_CASE("bipartite_2color")
{
    CHECK(bipartite_2color(cycle_graph(4)).has_value());
    CHECK_FALSE(bipartite_2color(cycle_graph(5)).has_value());

    auto edgeless = bipartite_2color(Graph(7, {}));
    REQUIRE(edgeless.has_value());
    CHECK(edgeless->colors_used() == 1);

    std::mt19937_64 rng(5);
    for (int it = 0; it < 60; ++it) {
        Graph g = random_graph(2 + int(rng() % 10), 0.3, rng);
        auto c = bipartite_2color(g);
        CHECK(c.has_value() == (chromatic_number(g) <= 2));
        if (c)
            CHECK(is_proper(g, *c));
    }
}
