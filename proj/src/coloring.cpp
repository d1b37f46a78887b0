#include "kitefree/coloring.hpp"

#include "coloring_internal.hpp"

namespace kitefree {

namespace detail {

std::vector<VertexSet> classes_from_subcoloring(int host_n, const Coloring& sub,
                                                const std::vector<int>& map, int slots)
{
    std::vector<VertexSet> out(slots, VertexSet(host_n));
    for (size_t i = 0; i < map.size(); ++i) {
        int c = sub.colors[i];
        if (c >= 0 && c < slots)
            out[c].set(map[i]);
    }
    return out;
}

std::vector<VertexSet> exact_color_or_fail(const Graph& g, const VertexSet& s, int k,
                                           const char* what, const CaseTrace& trace)
{
    auto [h, map] = induced_subgraph(g, s);
    auto col = k_colorable(h, k, h.size()); // size bound intentionally off
    if (!col)
        throw SoundnessError(SoundnessKind::OutOfClass,
                             std::string(what) + " is not " + std::to_string(k) +
                                 "-colorable; class hypothesis violated",
                             s.to_vector(), trace);
    return classes_from_subcoloring(g.size(), *col, map, k);
}

} // namespace detail

Coloring assemble_coloring(const Graph& g, const std::vector<VertexSet>& classes,
                           int budget, const CaseTrace& trace)
{
    if (int(classes.size()) > budget)
        throw SoundnessError(SoundnessKind::CaseExhausted,
                             "more color classes than the certified budget", {}, trace);
    Coloring col{std::vector<int>(g.size(), -1), budget};
    for (size_t c = 0; c < classes.size(); ++c) {
        for (int v = classes[c].first(); v >= 0; v = classes[c].next(v)) {
            if (col.colors[v] >= 0)
                throw SoundnessError(SoundnessKind::PartitionIncomplete,
                                     "vertex assigned to two color classes", {v}, trace);
            col.colors[v] = int(c);
        }
        auto [u, v] = find_internal_edge(g, classes[c]);
        if (u >= 0)
            throw SoundnessError(SoundnessKind::StableSetViolated,
                                 "color class " + std::to_string(c) + " contains an edge",
                                 {u, v}, trace);
    }
    for (int v = 0; v < g.size(); ++v)
        if (col.colors[v] < 0)
            throw SoundnessError(SoundnessKind::PartitionIncomplete,
                                 "vertex not covered by any color class", {v}, trace);
    return col;
}

Coloring two_color_rest(const Graph& g, int v, const CaseTrace& ctx)
{
    VertexSet rest = g.non_neighbors(v);
    rest.set(v);
    auto [h, map] = induced_subgraph(g, rest);
    auto bip = bipartite_2color(h);
    if (!bip)
        throw SoundnessError(SoundnessKind::OutOfClass,
                             "{v} ∪ non-neighbors of pivot is not bipartite", {v}, ctx);
    Coloring out{std::vector<int>(g.size(), -1), 2};
    for (size_t i = 0; i < map.size(); ++i)
        out.colors[map[i]] = bip->colors[i];
    return out;
}

Coloring lift_color(const Graph& g, const BaseColorer& base, CaseTrace& trace)
{
    if (g.size() == 0) {
        Coloring empty = base(Graph(0, {}), trace);
        return Coloring{{}, empty.bound + 2};
    }
    const int pivot = 0; // least id, for determinism
    auto [h, map] = induced_subgraph(g, g.neighbors(pivot));
    Coloring inner = base(h, trace);
    Coloring rest = two_color_rest(g, pivot, trace);
    int fresh = inner.max_color() + 1;

    Coloring out{std::vector<int>(g.size(), -1), inner.bound + 2};
    for (size_t i = 0; i < map.size(); ++i)
        out.colors[map[i]] = inner.colors[i];
    for (int v = 0; v < g.size(); ++v)
        if (rest.colors[v] >= 0)
            out.colors[v] = fresh + rest.colors[v];
    auto [x, y] = coloring_defect(g, out);
    if (x >= 0)
        throw SoundnessError(x == y ? SoundnessKind::PartitionIncomplete
                                    : SoundnessKind::StableSetViolated,
                             "lifted coloring fails re-check", {x, y}, trace);
    return out;
}

Coloring color_c5free(const Graph& g, CaseTrace& trace)
{
    trace.push("c5free:lift");
    return lift_color(
        g, [](const Graph& h, CaseTrace& tr) { return color_c5free_k5free(h, tr); }, trace);
}

namespace {

Coloring color_ktfree_rec(const Graph& g, int t, CaseTrace& trace)
{
    if (t == 6) {
        if (auto emb = find_induced(g, PatternId::C5)) {
            trace.push("main:has_c5");
            C5Partition p = build_c5_partition(g, *emb, trace);
            return color_with_c5(g, p, trace);
        }
        trace.push("main:c5_free");
        return color_c5free(g, trace);
    }
    trace.push("ktfree:lift");
    return lift_color(
        g, [t](const Graph& h, CaseTrace& tr) { return color_ktfree_rec(h, t - 1, tr); },
        trace);
}

CertifiedColoring certify(const Graph& g, int t, bool check_class)
{
    if (t < 6)
        throw std::invalid_argument("color_ktfree requires t >= 6");
    if (check_class) {
        ClassReport rep = class_check(g, main_class(t));
        if (!rep.member)
            throw OutOfClassError(std::move(rep));
    }
    CaseTrace trace;
    Coloring col = color_ktfree_rec(g, t, trace);
    auto [x, y] = coloring_defect(g, col);
    if (x >= 0)
        throw SoundnessError(SoundnessKind::StableSetViolated,
                             "final coloring fails the independent recheck", {x, y}, trace);
    if (col.bound != 2 * t - 5)
        throw SoundnessError(SoundnessKind::CaseExhausted, "budget bookkeeping mismatch", {}, trace);
    if (!is_valid_trace(trace))
        throw SoundnessError(SoundnessKind::CaseExhausted,
                             "trace is not a root-to-leaf registry path: " + trace.joined(),
                             {}, trace);
    return {std::move(col), std::move(trace)};
}

} // namespace

CertifiedColoring color_main(const Graph& g, bool check_class)
{
    return certify(g, 6, check_class);
}

CertifiedColoring color_ktfree(const Graph& g, int t, bool check_class)
{
    return certify(g, t, check_class);
}

} // namespace kitefree
