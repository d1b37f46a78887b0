#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kitefree/coloring.hpp"
#include "kitefree/generators.hpp"
#include "test_util.hpp"

using namespace kitefree;

namespace {

Embedding identity_c5()
{
    return Embedding{PatternId::C5, {0, 1, 2, 3, 4}};
}

} // namespace

TEST_CASE("build_c5_partition on the bare ring")
{
    Graph g = cycle_graph(5);
    CaseTrace ctx;
    auto p = build_c5_partition(g, identity_c5(), ctx);
    for (int i = 0; i < 5; ++i) {
        CHECK(p.a[i] == VertexSet::of(5, {i}));
        CHECK(p.b[i].empty());
    }
    CHECK(p.d.empty());
}

TEST_CASE("build_c5_partition absorbs blow-up twins")
{
    Graph g = c5_blowup({2, 1, 1, 1, 1});
    CHECK(g.size() == 6);
    CHECK(g.edge_count() == 7);
    auto emb = find_induced(g, PatternId::C5);
    REQUIRE(emb.has_value());
    CaseTrace ctx;
    auto p = build_c5_partition(g, *emb, ctx);
    int total = 0;
    for (int i = 0; i < 5; ++i)
        total += p.a[i].count();
    CHECK(total == 6);
    CHECK(p.b_all().empty());
    CHECK(p.d.empty());
}

TEST_CASE("build_c5_partition classifies the complete side as d")
{
    // two joined 5-antirings: the ring lives in one factor, the whole other
    // factor sees every column
    Graph g = tight_example(2, false);
    auto emb = find_induced(g, PatternId::C5);
    REQUIRE(emb.has_value());
    CaseTrace ctx;
    auto p = build_c5_partition(g, *emb, ctx);
    CHECK(p.a_all().count() == 5);
    CHECK(p.b_all().empty());
    CHECK(p.d.count() == 5);
}

TEST_CASE("color_with_c5 on the bare ring uses the empty-d branch")
{
    Graph g = cycle_graph(5);
    CaseTrace trace;
    auto p = build_c5_partition(g, identity_c5(), trace);
    auto col = color_with_c5(g, p, trace);
    CHECK(is_proper(g, col));
    CHECK(col.colors_used() == 3); // two b∪a classes collapse to singletons
    CHECK(trace.tags == std::vector<std::string>{"ghasc5:d_empty"});
}

TEST_CASE("blow-ups keep the empty-d branch after absorption")
{
    Graph g = c5_blowup({2, 2, 2, 2, 2});
    auto cert = color_main(g);
    CHECK(is_proper(g, cert.coloring));
    CHECK(cert.coloring.colors_used() <= 7);
    CHECK(chromatic_number(g) == 5);
    CHECK(cert.trace.tags == std::vector<std::string>{"main:has_c5", "ghasc5:d_empty"});
    CHECK(cert.coloring.colors_used() >= 5);
}

TEST_CASE("tight example at omega 4 takes the cut-column branch")
{
    Graph g = tight_example(2, false);
    auto cert = color_main(g);
    CHECK(is_proper(g, cert.coloring));
    CHECK(cert.coloring.colors_used() <= 7);
    CHECK(chromatic_number(g) == 6);
    CHECK(cert.coloring.colors_used() >= 6);
    REQUIRE(cert.trace.tags.size() == 2);
    CHECK(cert.trace.tags[1] == "ghasc5:bb_anticomplete");
}

TEST_CASE("tight example with apex is colored with exactly 7")
{
    Graph g = tight_example(2, true);
    auto cert = color_main(g);
    CHECK(is_proper(g, cert.coloring));
    CHECK(cert.coloring.colors_used() <= 7);
    CHECK(chromatic_number(g) == 7);
    CHECK(cert.coloring.colors_used() == 7);
}

TEST_CASE("refusal with witness on out-of-class input")
{
    Graph p5 = pattern(PatternId::P5).tmpl;
    try {
        color_main(p5);
        FAIL("expected refusal");
    } catch (const OutOfClassError& e) {
        CHECK_FALSE(e.report.member);
        bool saw_2k2 = false;
        for (const auto& v : e.report.violations)
            if (v.pattern_name == "2K2")
                saw_2k2 = true;
        CHECK(saw_2k2);
    }
}

TEST_CASE("ktfree budgets")
{
    Graph k6 = complete_graph(6);
    auto cert = color_ktfree(k6, 7);
    CHECK(is_proper(k6, cert.coloring));
    CHECK(cert.coloring.bound == 9);
    CHECK(cert.coloring.colors_used() == 6);

    Graph tight = tight_example(2, true);
    auto cert2 = color_ktfree(tight, 7);
    CHECK(is_proper(tight, cert2.coloring));
    CHECK(cert2.coloring.colors_used() <= 9);

    CHECK_THROWS_AS(color_ktfree(complete_graph(3), 5), std::invalid_argument);
}

TEST_CASE("ktfree refuses K7 when t = 7")
{
    CHECK_THROWS_AS(color_ktfree(complete_graph(7), 7), OutOfClassError);
    CHECK_NOTHROW(color_ktfree(complete_graph(6), 7));
}

TEST_CASE("exhaustive differential over all labeled members at n <= 5")
{
    auto cls = *class_by_name("main2K2K6");
    int members = 0;
    for (int n = 0; n <= 5; ++n) {
        enumerate_small(n, cls, [&](const Graph& g) {
            ++members;
            auto cert = color_main(g, false);
            REQUIRE(is_proper(g, cert.coloring));
            REQUIRE(cert.coloring.colors_used() <= 7);
            REQUIRE(cert.coloring.colors_used() >= chromatic_number(g));
            REQUIRE(is_valid_trace(cert.trace));
        });
    }
    CHECK(members > 500);
}

TEST_CASE("random in-class instances color within budget")
{
    auto cls = *class_by_name("main2K2K6");
    int found = 0;
    for (uint64_t seed = 1000; seed < 1120 && found < 40; ++seed) {
        auto g = random_in_class(seed, 4 + int(seed % 8), cls);
        if (!g)
            continue;
        ++found;
        auto cert = color_main(*g, false);
        CHECK(is_proper(*g, cert.coloring));
        CHECK(cert.coloring.colors_used() <= 7);
        CHECK(is_valid_trace(cert.trace));
    }
    CHECK(found >= 20);
}

TEST_CASE("trace registry accepts exactly the leaf paths")
{
    CaseTrace good;
    good.tags = {"main:has_c5", "ghasc5:d_empty"};
    CHECK(is_valid_trace(good));

    CaseTrace lifted;
    lifted.tags = {"ktfree:lift", "main:c5_free", "c5free:lift", "c5k5:c7bar", "c7bar:pivot"};
    CHECK(is_valid_trace(lifted));

    CaseTrace bad;
    bad.tags = {"main:has_c5", "c9bar:case1"};
    CHECK_FALSE(is_valid_trace(bad));

    CaseTrace partial;
    partial.tags = {"main:has_c5", "ghasc5:case1"};
    CHECK_FALSE(is_valid_trace(partial));

    for (const std::string& leaf : all_trace_leaves())
        CHECK(!leaf.empty());
    CHECK(all_trace_leaves().size() == 19);
}
