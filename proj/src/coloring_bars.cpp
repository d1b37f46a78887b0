#include "coloring_internal.hpp"

namespace kitefree {

using detail::ring_mask;

namespace {

constexpr int kFull9 = (1 << 9) - 1;
constexpr int kFull7 = (1 << 7) - 1;

int a9_mask(int i)
{
    int drop = 0;
    for (int k = 3; k <= 6; ++k)
        drop |= 1 << ((i + k) % 9);
    return kFull9 & ~drop;
}

int b9_mask(int i)
{
    int drop = (1 << ((i + 8) % 9)) | (1 << i) | (1 << ((i + 1) % 9));
    return kFull9 & ~drop;
}

// Vertices of src split by whether they have a neighbor in tgt.
VertexSet pick_by_neighbor(const Graph& g, const VertexSet& src, const VertexSet& tgt, bool want)
{
    VertexSet out(g.size());
    for (int v = src.first(); v >= 0; v = src.next(v))
        if (g.neighbors(v).intersects(tgt) == want)
            out.set(v);
    return out;
}

void require_anticomplete(const Graph& g, const VertexSet& s, const VertexSet& t,
                          const char* what, const CaseTrace& ctx)
{
    auto [u, v] = find_cross_edge(g, s, t);
    if (u >= 0)
        throw SoundnessError(SoundnessKind::StableSetViolated,
                             std::string(what) + " must be anticomplete", {u, v}, ctx);
}

void require_stable(const Graph& g, const VertexSet& s, const char* what, const CaseTrace& ctx)
{
    auto [u, v] = find_internal_edge(g, s);
    if (u >= 0)
        throw SoundnessError(SoundnessKind::StableSetViolated,
                             std::string(what) + " must be a stable set", {u, v}, ctx);
}

void require_complete(const Graph& g, const VertexSet& s, const VertexSet& t,
                      const char* what, const CaseTrace& ctx)
{
    for (int u = s.first(); u >= 0; u = s.next(u)) {
        VertexSet missing = t - g.neighbors(u);
        missing.reset(u);
        if (missing.any())
            throw SoundnessError(SoundnessKind::StableSetViolated,
                                 std::string(what) + " must be complete", {u, missing.first()}, ctx);
    }
}

} // namespace

C9barPartition build_c9bar_partition(const Graph& g, const Embedding& emb, const CaseTrace& ctx)
{
    if (emb.pattern_id != PatternId::C9bar || !verify_embedding(g, emb))
        throw std::invalid_argument("build_c9bar_partition: embedding does not re-verify");
    C9barPartition p;
    VertexSet qset(g.size());
    for (int i = 0; i < 9; ++i) {
        p.q[i] = emb.map[i];
        qset.set(emb.map[i]);
        p.a[i] = VertexSet(g.size());
        p.b[i] = VertexSet(g.size());
    }
    for (int u = 0; u < g.size(); ++u) {
        if (qset.test(u))
            continue;
        int m = ring_mask(g, u, p.q);
        bool placed = false;
        for (int i = 0; i < 9 && !placed; ++i) {
            if (m == a9_mask(i)) {
                p.a[i].set(u);
                placed = true;
            } else if (m == b9_mask(i)) {
                p.b[i].set(u);
                placed = true;
            }
        }
        if (!placed)
            throw SoundnessError(SoundnessKind::PartitionIncomplete,
                                 "vertex fits no 9-ring signature class", {u}, ctx);
    }
    for (int i = 0; i < 9; ++i) {
        int j = (i + 1) % 9;
        require_stable(g, p.a[i], "a[i]", ctx);
        require_anticomplete(g, p.a[i], p.a[j], "[a[i], a[i+1]]", ctx);
        require_stable(g, p.b[i], "b[i]", ctx);
        require_anticomplete(g, p.b[i], p.b[j], "[b[i], b[i+1]]", ctx);
        require_anticomplete(g, p.a[i], p.b[(i + 4) % 9], "[a[i], b[i+4]]", ctx);
        require_anticomplete(g, p.a[i], p.b[(i + 5) % 9], "[a[i], b[i-4]]", ctx);
        for (int x = p.a[i].first(); x >= 0; x = p.a[i].next(x)) {
            bool plus = g.neighbors(x).intersects(p.b[(i + 3) % 9]);
            bool minus = g.neighbors(x).intersects(p.b[(i + 6) % 9]);
            if (plus && minus)
                throw SoundnessError(SoundnessKind::StableSetViolated,
                                     "a-vertex has neighbors in both b[i+3] and b[i-3]", {x}, ctx);
        }
    }
    return p;
}

Coloring color_c9bar(const Graph& g, const Embedding& emb, CaseTrace& trace)
{
    // validates the embedding and every structural fact once
    build_c9bar_partition(g, emb, trace);

    auto set_of = [&](std::initializer_list<int> vs) {
        VertexSet s(g.size());
        for (int v : vs)
            s.set(v);
        return s;
    };

    for (const auto& perm : dihedral_maps(9)) {
        C9barPartition p = build_c9bar_partition(g, apply_relabeling(emb, perm), trace);
        if (!anticomplete_between(g, p.a[8], p.b[2]))
            continue;
        trace.push("c9bar:case1");
        std::vector<VertexSet> cls(5, VertexSet(g.size()));
        cls[0] = set_of({p.q[0], p.q[1]}) | p.a[5] | p.a[6] | p.b[1];
        cls[1] = set_of({p.q[2], p.q[3]}) | p.a[7] | p.a[8] | p.b[2] | p.b[3];
        cls[2] = set_of({p.q[4], p.q[5]}) | p.a[0] | p.b[4] | p.b[5]
                 | pick_by_neighbor(g, p.a[1], p.b[4], false);
        cls[3] = set_of({p.q[8]}) | p.a[4] | p.b[0] | p.b[8]
                 | pick_by_neighbor(g, p.a[3], p.b[0], false);
        cls[4] = set_of({p.q[6], p.q[7]}) | p.a[2] | p.b[6] | p.b[7]
                 | pick_by_neighbor(g, p.a[1], p.b[4], true)
                 | pick_by_neighbor(g, p.a[3], p.b[0], true);
        return assemble_coloring(g, cls, 5, trace);
    }

    // no relabeling has an anticomplete [a9, b3] column pair
    C9barPartition p = build_c9bar_partition(g, emb, trace);
    trace.push("c9bar:case2");
    std::vector<VertexSet> cls(5, VertexSet(g.size()));
    cls[0] = set_of({p.q[0], p.q[1]}) | p.a[5] | p.b[0] | p.b[1]
             | pick_by_neighbor(g, p.a[6], p.b[0], false);
    cls[1] = set_of({p.q[2], p.q[3]}) | p.a[7] | p.b[2] | p.b[3]
             | pick_by_neighbor(g, p.a[6], p.b[0], true)
             | pick_by_neighbor(g, p.a[8], p.b[5], true);
    cls[2] = set_of({p.q[4], p.q[5]}) | p.a[0] | p.b[4] | p.b[5]
             | pick_by_neighbor(g, p.a[8], p.b[5], false);
    cls[3] = set_of({p.q[6], p.q[7]}) | p.a[1] | p.a[2] | p.b[6]
             | pick_by_neighbor(g, p.b[7], p.a[1], false);
    cls[4] = set_of({p.q[8]}) | p.a[3] | p.a[4] | p.b[8]
             | pick_by_neighbor(g, p.b[7], p.a[1], true);
    return assemble_coloring(g, cls, 5, trace);
}

namespace {

int a7_mask(int i)
{
    return (1 << ((i + 6) % 7)) | (1 << i) | (1 << ((i + 1) % 7));
}

int b7_mask(int i)
{
    return kFull7 & ~a7_mask(i);
}

int d7_mask(int i)
{
    return kFull7 & ~((1 << ((i + 3) % 7)) | (1 << ((i + 4) % 7)));
}

} // namespace

C7barPartition build_c7bar_partition(const Graph& g, const Embedding& emb, int dom, const CaseTrace& ctx)
{
    if (emb.pattern_id != PatternId::C7bar || !verify_embedding(g, emb))
        throw std::invalid_argument("build_c7bar_partition: embedding does not re-verify");
    C7barPartition p;
    p.dom = dom;
    VertexSet qset(g.size());
    for (int i = 0; i < 7; ++i) {
        p.q[i] = emb.map[i];
        qset.set(emb.map[i]);
        p.a[i] = VertexSet(g.size());
        p.b[i] = VertexSet(g.size());
        p.d[i] = VertexSet(g.size());
    }
    p.w = VertexSet(g.size());
    for (int u = 0; u < g.size(); ++u) {
        if (qset.test(u))
            continue;
        int m = ring_mask(g, u, p.q);
        if (m == kFull7) {
            p.w.set(u);
            continue;
        }
        bool placed = false;
        for (int i = 0; i < 7 && !placed; ++i) {
            if (m == a7_mask(i)) {
                p.a[i].set(u);
                placed = true;
            } else if (m == b7_mask(i)) {
                p.b[i].set(u);
                placed = true;
            } else if (m == d7_mask(i)) {
                p.d[i].set(u);
                placed = true;
            }
        }
        if (!placed)
            throw SoundnessError(SoundnessKind::PartitionIncomplete,
                                 "vertex fits no 7-ring signature class", {u}, ctx);
    }
    if (!p.w.test(dom))
        throw SoundnessError(SoundnessKind::PartitionIncomplete,
                             "dominator is not complete to the ring", {dom}, ctx);

    VertexSet ab(g.size()), dall(g.size());
    for (int i = 0; i < 7; ++i) {
        ab |= p.a[i];
        ab |= p.b[i];
        dall |= p.d[i];
    }
    for (int i = 0; i < 7; ++i) {
        int j = (i + 1) % 7;
        require_stable(g, p.a[i], "a[i]", ctx);
        require_anticomplete(g, p.a[i], p.a[j], "[a[i], a[i+1]]", ctx);
        if (p.a[i].any() && (p.a[(i + 3) % 7].any() || p.a[(i + 4) % 7].any()))
            throw SoundnessError(SoundnessKind::StableSetViolated,
                                 "a-columns at ring distance 3 are both inhabited",
                                 {p.a[i].first()}, ctx);
        require_stable(g, p.b[i], "b[i]", ctx);
        require_anticomplete(g, p.b[i], p.b[j], "[b[i], b[i+1]]", ctx);
        require_stable(g, p.d[i], "d[i]", ctx);
        require_anticomplete(g, p.a[i], p.b[(i + 3) % 7], "[a[i], b[i+3]]", ctx);
        require_anticomplete(g, p.a[i], p.b[(i + 4) % 7], "[a[i], b[i-3]]", ctx);
        for (int x = p.a[i].first(); x >= 0; x = p.a[i].next(x)) {
            bool plus = g.neighbors(x).intersects(p.b[(i + 2) % 7]);
            bool minus = g.neighbors(x).intersects(p.b[(i + 5) % 7]);
            if (plus && minus)
                throw SoundnessError(SoundnessKind::StableSetViolated,
                                     "a-vertex has neighbors in both b[i+2] and b[i-2]", {x}, ctx);
        }
        require_complete(g, p.d[i], p.d[(i + 2) % 7], "[d[i], d[i+2]]", ctx);
        require_complete(g, p.d[i], p.d[(i + 3) % 7], "[d[i], d[i+3]]", ctx);
        require_anticomplete(g, p.d[i], p.d[j], "[d[i], d[i+1]]", ctx);
        require_anticomplete(g, p.a[i], p.d[j], "[a[i], d[i+1]]", ctx);
        require_anticomplete(g, p.a[i], p.d[(i + 6) % 7], "[a[i], d[i-1]]", ctx);
        if (p.a[i].any() && p.d[j].any() && p.d[(i + 6) % 7].any())
            throw SoundnessError(SoundnessKind::StableSetViolated,
                                 "inhabited a-column flanked by two inhabited d-columns",
                                 {p.a[i].first()}, ctx);
        require_complete(g, p.a[i], p.a[(i + 2) % 7], "[a[i], a[i+2]]", ctx);
        require_complete(g, p.a[i], p.d[(i + 2) % 7], "[a[i], d[i+2]]", ctx);
        require_complete(g, p.a[i], p.d[(i + 5) % 7], "[a[i], d[i-2]]", ctx);
        require_anticomplete(g, p.b[i], p.d[(i + 3) % 7], "[b[i], d[i+3]]", ctx);
        require_anticomplete(g, p.b[i], p.d[(i + 4) % 7], "[b[i], d[i-3]]", ctx);
    }
    require_stable(g, p.w, "w", ctx);
    require_complete(g, p.w, ab, "[w, a ∪ b]", ctx);
    require_anticomplete(g, p.w, dall, "[w, d]", ctx);
    {
        auto [sub, map] = induced_subgraph(g, dall);
        if (!bipartite_2color(sub))
            throw SoundnessError(SoundnessKind::StableSetViolated,
                                 "d-part is not bipartite", dall.to_vector(), ctx);
    }
    return p;
}

namespace {

std::vector<int> inhabited_d(const C7barPartition& p)
{
    std::vector<int> out;
    for (int i = 0; i < 7; ++i)
        if (p.d[i].any())
            out.push_back(i);
    return out;
}

// two windows {x, x+1} and {y, y+1} that cover the inhabited d-columns
// disjointly (the partition of D into two stable column pairs)
bool window_pair_valid(const std::vector<int>& idx, int x, int y)
{
    auto in = [](int j, int w) { return j == w || j == (w + 1) % 7; };
    for (int j : idx) {
        bool inx = in(j, x), iny = in(j, y);
        if (inx && iny)
            return false;
        if (!inx && !iny)
            return false;
    }
    return true;
}

int least_partner(const std::vector<int>& idx, int x)
{
    for (int y = 0; y < 7; ++y)
        if (window_pair_valid(idx, x, y))
            return y;
    return -1;
}

bool a_window_ok(const C7barPartition& p)
{
    // every inhabited a-column lies in positions 1..3
    return p.a[0].empty() && p.a[4].empty() && p.a[5].empty() && p.a[6].empty();
}

} // namespace

Coloring color_c7bar(const Graph& g, CaseTrace& trace)
{
    auto dom = find_dominated_c7bar(g);
    if (!dom) {
        trace.push("c7bar:pivot");
        // neighborhood is triangle-bounded and perfect here, so an exact
        // 3-coloring must exist; its absence proves the input out of class
        return lift_color(
            g,
            [&](const Graph& h, CaseTrace& tr) {
                auto col = k_colorable(h, 3, h.size());
                if (!col)
                    throw SoundnessError(SoundnessKind::OutOfClass,
                                         "pivot neighborhood is not 3-colorable", {}, tr);
                return *col;
            },
            trace);
    }

    trace.push("c7bar:dominated");
    build_c7bar_partition(g, dom->emb, dom->dominator, trace); // full fact check once

    struct Route {
        int kind; // 0: window {4,5}; 1: window {5,6}; 2: window {0,1}
        C7barPartition p;
        int x, y;
    };
    std::optional<Route> route;

    std::vector<C7barPartition> candidates;
    for (const auto& perm : dihedral_maps(7)) {
        C7barPartition p = build_c7bar_partition(g, apply_relabeling(dom->emb, perm),
                                                 dom->dominator, trace);
        if (a_window_ok(p))
            candidates.push_back(std::move(p));
    }
    if (candidates.empty())
        throw SoundnessError(SoundnessKind::CaseExhausted,
                             "no ring labeling confines the a-columns to one window", {}, trace);

    for (const auto& p : candidates) {
        int y = least_partner(inhabited_d(p), 4);
        if (y >= 0) {
            route = Route{0, p, 4, y};
            break;
        }
    }
    if (!route)
        for (const auto& p : candidates) {
            int y = least_partner(inhabited_d(p), 5);
            if (y >= 0) {
                route = Route{1, p, 5, y};
                break;
            }
        }
    if (!route)
        for (const auto& p : candidates) {
            if (p.a[1].any() || p.a[2].any())
                continue;
            int y = least_partner(inhabited_d(p), 0);
            if (y >= 0) {
                route = Route{2, p, 0, y};
                break;
            }
        }
    if (!route)
        throw SoundnessError(SoundnessKind::CaseExhausted,
                             "d-columns admit no published window split", {}, trace);

    const C7barPartition& p = route->p;
    std::vector<VertexSet> cls(5, VertexSet(g.size()));
    auto add = [&](int c, const VertexSet& s) { cls[c] |= s; };
    auto addv = [&](int c, int v) { cls[c].set(v); };

    addv(0, p.q[4]);
    addv(0, p.q[5]);
    add(0, p.a[1]);
    add(0, p.b[4]);
    add(0, p.b[5]);
    add(0, pick_by_neighbor(g, p.a[2], p.b[0], true));
    addv(1, p.q[0]);
    addv(1, p.q[6]);
    add(1, p.a[3]);
    add(1, p.b[0]);
    add(1, p.b[6]);
    add(1, pick_by_neighbor(g, p.a[2], p.b[0], false));
    addv(2, p.q[1]);
    add(2, p.b[1]);
    addv(3, p.q[3]);
    add(3, p.b[3]);
    add(4, p.w);

    VertexSet s2(g.size());
    auto in_window = [&](int j, int x) { return j == x || j == (x + 1) % 7; };
    for (int j : inhabited_d(p))
        if (in_window(j, route->y) && !in_window(j, route->x))
            s2 |= p.d[j];
    add(4, s2);

    VertexSet v3b3 = p.b[2];
    v3b3.set(p.q[2]);
    switch (route->kind) {
    case 0: // d[4] ∪ d[5] takes the {q1,b1} color, the spare column pair goes high
        trace.push("c7bar:d56");
        add(2, p.d[4]);
        add(2, p.d[5]);
        add(3, v3b3);
        break;
    case 1:
        trace.push("c7bar:d67");
        add(2, p.d[5]);
        add(3, p.d[6]);
        add(2, v3b3);
        break;
    default:
        trace.push("c7bar:dlow");
        add(3, p.d[0]);
        add(0, p.d[1]);
        add(2, v3b3);
        break;
    }
    return assemble_coloring(g, cls, 5, trace);
}

Coloring color_c5free_k5free(const Graph& g, CaseTrace& trace)
{
    if (auto emb = find_induced(g, PatternId::C9bar)) {
        trace.push("c5k5:c9bar");
        return color_c9bar(g, *emb, trace);
    }
    trace.push("c5k5:c7bar");
    return color_c7bar(g, trace);
}

} // namespace kitefree
