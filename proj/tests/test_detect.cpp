#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kitefree/detect.hpp"
#include "test_util.hpp"

using namespace kitefree;
using testutil::petersen;
using testutil::random_graph;
using testutil::subset_contains_induced;

TEST_CASE("find_induced on fixed cases")
{
    // C5 is self-complementary
    CHECK(find_induced(complement(cycle_graph(5)), PatternId::C5).has_value());
    // kite has 5 vertices but is not P5
    CHECK_FALSE(find_induced(pattern(PatternId::kite).tmpl, PatternId::P5).has_value());
    // Petersen contains C5 (cross-checked against the subset oracle below)
    CHECK(find_induced(petersen(), PatternId::C5).has_value());
    CHECK(subset_contains_induced(petersen(), cycle_graph(5)));
}

TEST_CASE("cyclic labeling convention on identity case")
{
    Graph host = cycle_complement(9);
    auto emb = find_induced(host, PatternId::C9bar);
    REQUIRE(emb.has_value());
    CHECK(verify_embedding(host, *emb));
    for (int i = 0; i < 9; ++i)
        CHECK_FALSE(host.adjacent(emb->map[i], emb->map[(i + 1) % 9]));
}

TEST_CASE("embeddings returned by the matcher re-verify")
{
    std::mt19937_64 rng(31);
    for (int it = 0; it < 80; ++it) {
        Graph g = random_graph(4 + int(rng() % 6), 0.5, rng);
        for (const Pattern& p : pattern_catalog()) {
            auto emb = find_induced(g, p);
            if (emb)
                CHECK(verify_embedding(g, *emb));
        }
    }
}

TEST_CASE("matcher agrees with exhaustive subset oracle")
{
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 60; ++it) {
        int n = 1 + int(rng() % 9);
        Graph g = random_graph(n, 0.3 + 0.05 * double(rng() % 9), rng);
        for (const Pattern& p : pattern_catalog()) {
            bool got = find_induced(g, p).has_value();
            bool want = subset_contains_induced(g, p.tmpl);
            CHECK_MESSAGE(got == want, "pattern ", p.name, " on n=", n);
        }
    }
}

TEST_CASE("class_check fixed cases")
{
    CHECK(class_check(cycle_graph(5), "main2K2K6").member);

    Graph tight = compose(Compose::join,
                          compose(Compose::join, complement(cycle_graph(5)), complement(cycle_graph(5))),
                          complete_graph(1));
    auto rep = class_check(tight, "main2K2K6");
    CHECK(rep.member);

    auto p5rep = class_check(pattern(PatternId::P5).tmpl, "P5kite");
    CHECK_FALSE(p5rep.member);
    REQUIRE(p5rep.violations.size() == 1);
    CHECK(p5rep.violations[0].pattern_name == "P5");
    CHECK(p5rep.violations[0].witness.size() == 5);

    CHECK_THROWS_AS(class_check(cycle_graph(5), "nosuchclass"), std::invalid_argument);
}

TEST_CASE("class_check witnesses re-verify")
{
    std::mt19937_64 rng(77);
    for (int it = 0; it < 60; ++it) {
        Graph g = random_graph(4 + int(rng() % 6), 0.5, rng);
        auto rep = class_check(g, "main2K2K6");
        for (const auto& viol : rep.violations) {
            REQUIRE(viol.pattern_id.has_value());
            CHECK(verify_embedding(g, Embedding{*viol.pattern_id, viol.witness}));
        }
    }
}

TEST_CASE("hereditary consistency under induced subgraphs")
{
    std::mt19937_64 rng(88);
    int members = 0;
    for (int it = 0; it < 300 && members < 25; ++it) {
        int n = 3 + int(rng() % 6);
        Graph g = random_graph(n, 0.55, rng);
        if (!class_check(g, "main2K2K6").member)
            continue;
        ++members;
        for (int s = 0; s < 20; ++s) {
            VertexSet keep(n);
            for (int v = 0; v < n; ++v)
                if (rng() % 2)
                    keep.set(v);
            auto [h, map] = induced_subgraph(g, keep);
            CHECK(class_check(h, "main2K2K6").member);
        }
    }
    CHECK(members > 0);
}

TEST_CASE("find_dominated_c7bar")
{
    Graph c7b = cycle_complement(7);
    CHECK_FALSE(find_dominated_c7bar(c7b).has_value());

    Graph dom = compose(Compose::join, c7b, complete_graph(1));
    auto hit = find_dominated_c7bar(dom);
    REQUIRE(hit.has_value());
    CHECK(hit->dominator == 7);
    CHECK(verify_embedding(dom, hit->emb));
    for (int v : hit->emb.map)
        CHECK(dom.adjacent(hit->dominator, v));

    CHECK_FALSE(find_dominated_c7bar(cycle_complement(9)).has_value());
}

TEST_CASE("odd hole / antihole enumerator")
{
    auto c5hit = find_odd_hole_or_antihole(cycle_graph(5));
    REQUIRE(c5hit.has_value());
    CHECK_FALSE(c5hit->antihole);
    CHECK(c5hit->ring.size() == 5);

    // bipartite graphs are perfect
    Graph c6 = cycle_graph(6);
    CHECK_FALSE(find_odd_hole_or_antihole(c6).has_value());

    auto antihit = find_odd_hole_or_antihole(cycle_complement(7));
    REQUIRE(antihit.has_value());
    CHECK(antihit->antihole);
    CHECK(antihit->ring.size() == 7);

    CHECK_THROWS_AS(find_odd_hole_or_antihole(Graph(17, {})), BoundError);
}

TEST_CASE("dihedral maps")
{
    auto maps = dihedral_maps(5);
    CHECK(maps.size() == 10);
    // every map is a permutation preserving ring adjacency
    Graph ring = cycle_graph(5);
    for (const auto& m : maps) {
        for (int i = 0; i < 5; ++i)
            CHECK(ring.adjacent(m[i], m[(i + 1) % 5]));
    }
    Embedding e{PatternId::C5, {10, 11, 12, 13, 14}};
    Embedding r = apply_relabeling(e, maps[1]);
    CHECK(r.map == std::vector<int>{11, 12, 13, 14, 10});
}

TEST_CASE("find_clique_of_size")
{
    Graph g = compose(Compose::join, complete_graph(3), Graph(2, {}));
    auto q3 = find_clique_of_size(g, 4);
    REQUIRE(q3.has_value());
    CHECK(is_clique(g, *q3));
    CHECK(q3->count() == 4);
    CHECK_FALSE(find_clique_of_size(g, 5).has_value());
}
