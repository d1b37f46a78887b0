#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kitefree/coloring.hpp"
#include "kitefree/generators.hpp"
#include "test_util.hpp"

using namespace kitefree;

namespace {

Coloring restrict_check(const Graph& g, const Coloring& c, const VertexSet& domain)
{
    // partial colorings: colored exactly on `domain`, proper there
    for (int v = 0; v < g.size(); ++v)
        CHECK((c.colors[v] >= 0) == domain.test(v));
    for (auto [u, v] : g.edges())
        if (c.colors[u] >= 0 && c.colors[v] >= 0)
            CHECK(c.colors[u] != c.colors[v]);
    return c;
}

} // namespace

TEST_CASE("two_color_rest on fixed cases")
{
    CaseTrace ctx;

    Graph k5 = complete_graph(5);
    auto c = two_color_rest(k5, 2, ctx);
    restrict_check(k5, c, VertexSet::of(5, {2}));
    CHECK(c.colors_used() == 1);

    Graph c5 = cycle_graph(5);
    auto c2 = two_color_rest(c5, 0, ctx);
    restrict_check(c5, c2, VertexSet::of(5, {0, 2, 3}));
    CHECK(c2.colors_used() == 2); // 2-3 is an edge

    Graph c5k1 = compose(Compose::disjoint_union, cycle_graph(5), complete_graph(1));
    CHECK_THROWS_AS(two_color_rest(c5k1, 5, ctx), SoundnessError);
}

TEST_CASE("lift_color")
{
    CaseTrace trace;
    auto exact_base = [](const Graph& h, CaseTrace&) {
        int chi = chromatic_number(h);
        return *k_colorable(h, chi, h.size());
    };

    Graph k1 = complete_graph(1);
    auto c = lift_color(k1, exact_base, trace);
    CHECK(c.colors_used() == 1);
    CHECK(is_proper(k1, c));

    Graph c6 = cycle_graph(6);
    auto c2 = lift_color(c6, exact_base, trace);
    CHECK(is_proper(c6, c2));
    CHECK(c2.colors_used() <= 4);
}

TEST_CASE("lift uses at most base+2 colors on random in-class instances")
{
    auto cls = *class_by_name("main2K2K6");
    int found = 0;
    for (uint64_t seed = 1; seed <= 60 && found < 25; ++seed) {
        auto g = random_in_class(seed, 4 + int(seed % 6), cls);
        if (!g)
            continue;
        ++found;
        CaseTrace trace;
        int base_used = -1;
        auto base = [&](const Graph& h, CaseTrace&) {
            int chi = chromatic_number(h);
            auto col = *k_colorable(h, chi, h.size());
            base_used = col.colors_used();
            return col;
        };
        auto c = lift_color(*g, base, trace);
        CHECK(is_proper(*g, c));
        CHECK(c.colors_used() <= base_used + 2);
    }
    CHECK(found > 0);
}

TEST_CASE("c9bar partition and coloring on the bare 9-antiring")
{
    Graph g = cycle_complement(9);
    auto emb = find_induced(g, PatternId::C9bar);
    REQUIRE(emb.has_value());

    CaseTrace ctx;
    auto part = build_c9bar_partition(g, *emb, ctx);
    for (int i = 0; i < 9; ++i) {
        CHECK(part.a[i].empty());
        CHECK(part.b[i].empty());
    }

    CaseTrace trace;
    auto col = color_c9bar(g, *emb, trace);
    CHECK(is_proper(g, col));
    CHECK(col.bound == 5);
    CHECK(col.colors_used() <= 5);
    CHECK(chromatic_number(g) == 5); // budget is exact here
    CHECK(trace.tags == std::vector<std::string>{"c9bar:case1"});
}

TEST_CASE("c9bar with one b-attachment")
{
    // u sees the ring except three consecutive positions: a b-class vertex
    Graph base = cycle_complement(9);
    std::vector<std::pair<int, int>> e = base.edges();
    for (int v = 2; v <= 7; ++v)
        e.emplace_back(9, v); // N(u) = Q \ {v9, v1, v2} (ids 8, 0, 1)
    Graph g(10, e);

    auto emb = find_induced(g, PatternId::C9bar);
    REQUIRE(emb.has_value());
    CaseTrace trace;
    auto col = color_c9bar(g, *emb, trace);
    CHECK(is_proper(g, col));
    CHECK(col.colors_used() <= 5);
    CHECK(chromatic_number(g) == 5);

    CaseTrace ctx;
    auto part = build_c9bar_partition(g, Embedding{PatternId::C9bar, {0, 1, 2, 3, 4, 5, 6, 7, 8}}, ctx);
    CHECK(part.b[0] == VertexSet::of(10, {9}));
}

TEST_CASE("c9bar rejects an invalid embedding")
{
    Graph g = cycle_complement(9);
    CaseTrace trace;
    Embedding bad{PatternId::C9bar, {0, 1, 2, 3, 4, 5, 6, 8, 7}};
    CHECK_THROWS_AS(color_c9bar(g, bad, trace), std::invalid_argument);
}

TEST_CASE("c7bar pivot branch")
{
    Graph g = cycle_complement(7);
    CaseTrace trace;
    auto col = color_c7bar(g, trace);
    CHECK(is_proper(g, col));
    CHECK(col.bound == 5);
    CHECK(col.colors_used() <= 5);
    CHECK(chromatic_number(g) == 4);
    CHECK(trace.tags == std::vector<std::string>{"c7bar:pivot"});

    Graph c4 = cycle_graph(4);
    CaseTrace t2;
    auto col2 = color_c7bar(c4, t2);
    CHECK(is_proper(c4, col2));
    CHECK(col2.colors_used() <= 4);
}

TEST_CASE("c7bar dominated branch")
{
    Graph g = compose(Compose::join, cycle_complement(7), complete_graph(1));
    CaseTrace trace;
    auto col = color_c7bar(g, trace);
    CHECK(is_proper(g, col));
    CHECK(col.colors_used() <= 5);
    CHECK(chromatic_number(g) == 5);
    REQUIRE(trace.tags.size() >= 1);
    CHECK(trace.tags[0] == "c7bar:dominated");

    CaseTrace ctx;
    auto dom = find_dominated_c7bar(g);
    REQUIRE(dom.has_value());
    auto part = build_c7bar_partition(g, dom->emb, dom->dominator, ctx);
    CHECK(part.w == VertexSet::of(8, {7}));
    for (int i = 0; i < 7; ++i) {
        CHECK(part.a[i].empty());
        CHECK(part.b[i].empty());
        CHECK(part.d[i].empty());
    }
}

TEST_CASE("c5-free k5-free dispatcher")
{
    CaseTrace t1;
    auto c1 = color_c5free_k5free(cycle_complement(9), t1);
    CHECK(t1.tags[0] == "c5k5:c9bar");
    CHECK(c1.colors_used() <= 5);

    CaseTrace t2;
    auto c2 = color_c5free_k5free(cycle_complement(7), t2);
    CHECK(t2.tags[0] == "c5k5:c7bar");

    CaseTrace t3;
    auto c3 = color_c5free_k5free(complete_graph(4), t3);
    CHECK(is_proper(complete_graph(4), c3));
    CHECK(c3.colors_used() == 4);
}

TEST_CASE("color_c5free stays within 7")
{
    for (const Graph& g : {complete_graph(5), cycle_complement(9), cycle_graph(6)}) {
        CaseTrace trace;
        auto col = color_c5free(g, trace);
        CHECK(is_proper(g, col));
        CHECK(col.bound == 7);
        CHECK(col.colors_used() <= 7);
    }
    CaseTrace trace;
    auto c6 = color_c5free(cycle_graph(6), trace);
    CHECK(c6.colors_used() <= 4);
}

TEST_CASE("bars pipeline on random c5-free k5-free instances")
{
    auto cls = *class_by_name("c5free2K2K5");
    int found = 0;
    for (uint64_t seed = 100; seed < 200 && found < 30; ++seed) {
        auto g = random_in_class(seed, 5 + int(seed % 5), cls);
        if (!g)
            continue;
        ++found;
        CaseTrace trace;
        auto col = color_c5free_k5free(*g, trace);
        CHECK(is_proper(*g, col));
        CHECK(col.colors_used() <= 5);
        CHECK(chromatic_number(*g) <= col.colors_used());
    }
    CHECK(found > 0);
}
