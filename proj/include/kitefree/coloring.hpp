#pragma once

#include <array>
#include <functional>

#include "kitefree/detect.hpp"
#include "kitefree/oracle.hpp"
#include "kitefree/trace.hpp"

namespace kitefree {

// Builds a Coloring from the listed color classes, verifying disjointness,
// coverage of every vertex, stability of each class, and the budget. Class
// order fixes the palette. Throws SoundnessError; never trusts the caller.
Coloring assemble_coloring(const Graph& g, const std::vector<VertexSet>& classes,
                           int budget, const CaseTrace& trace);

// Proper 2-coloring of {v} ∪ non-neighbors of v (colors 0/1, other vertices
// -1). Fails with SoundnessError(OutOfClass) when that subgraph has an odd
// cycle, i.e. the caller's class hypothesis was wrong.
Coloring two_color_rest(const Graph& g, int v, const CaseTrace& ctx);

using BaseColorer = std::function<Coloring(const Graph&, CaseTrace&)>;

// Colors G[N(v)] for the least vertex v via `base`, and {v} ∪ non-neighbors
// with two fresh colors. Budget: base budget + 2.
Coloring lift_color(const Graph& g, const BaseColorer& base, CaseTrace& trace);

// 9-ring structure: vertices off the ring classified by their ring
// neighborhood (a[i]: non-neighbors are the four ring positions i+3..i+6;
// b[i]: non-neighbors are i-1, i, i+1). All structural facts re-verified.
struct C9barPartition {
    std::array<int, 9> q;
    std::array<VertexSet, 9> a, b;
};
C9barPartition build_c9bar_partition(const Graph& g, const Embedding& emb, const CaseTrace& ctx);

// 7-ring structure around a dominated ring: a[i] sees exactly ring positions
// i-1,i,i+1; b[i] everything else; d[i] misses exactly i-3,i+3; w sees all.
struct C7barPartition {
    std::array<int, 7> q;
    int dom;
    std::array<VertexSet, 7> a, b, d;
    VertexSet w;
};
C7barPartition build_c7bar_partition(const Graph& g, const Embedding& emb, int dom, const CaseTrace& ctx);

// 5-coloring entry points for the C5-free side.
Coloring color_c9bar(const Graph& g, const Embedding& emb, CaseTrace& trace);
Coloring color_c7bar(const Graph& g, CaseTrace& trace);
Coloring color_c5free_k5free(const Graph& g, CaseTrace& trace);
// 7-coloring of the C5-free class via one lift.
Coloring color_c5free(const Graph& g, CaseTrace& trace);

// Maximal blow-up decomposition around an induced 5-ring: a[i] are the ring
// classes (ring[i] ∈ a[i], complete to neighbors, anticomplete to
// non-neighbors, grown to a fixpoint), b[i] the mixed-attachment classes,
// d the vertices seeing every ring class.
struct C5Partition {
    std::array<int, 5> ring;
    std::array<VertexSet, 5> a, b;
    VertexSet d;

    VertexSet a_all() const;
    VertexSet b_all() const;
};
C5Partition build_c5_partition(const Graph& g, const Embedding& emb, const CaseTrace& ctx);

// 7-coloring of a graph carrying a verified blow-up decomposition.
Coloring color_with_c5(const Graph& g, const C5Partition& p, CaseTrace& trace);

// Partition of X ⊆ A∪B into 4 (or 3) stable sets, searching ring indices for
// one whose distance-2 column intersections are anticomplete. nullopt when no
// index qualifies.
std::optional<std::vector<VertexSet>> ring_split(const Graph& g, const C5Partition& p,
                                                 const VertexSet& x, bool want3);

struct CertifiedColoring {
    Coloring coloring;
    CaseTrace trace;
};

// Top-level: proper ≤7-coloring of a (2K2, K3+K1, C5+K1, K6)-free graph.
// Refuses out-of-class inputs with OutOfClassError unless check_class is off.
CertifiedColoring color_main(const Graph& g, bool check_class = true);

// K_t-free variant for t >= 6, budget 2t-5, by iterated lifting.
CertifiedColoring color_ktfree(const Graph& g, int t, bool check_class = true);

} // namespace kitefree
