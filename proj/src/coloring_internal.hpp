#pragma once

#include "kitefree/coloring.hpp"

namespace kitefree::detail {

// Bitmask of ring positions adjacent to u.
template <size_t K>
int ring_mask(const Graph& g, int u, const std::array<int, K>& q)
{
    int m = 0;
    for (size_t i = 0; i < K; ++i)
        if (g.adjacent(u, q[i]))
            m |= 1 << i;
    return m;
}

// Expand a coloring of an induced subgraph into host-side color classes,
// one per palette slot (empty slots allowed).
std::vector<VertexSet> classes_from_subcoloring(int host_n, const Coloring& sub,
                                                const std::vector<int>& map, int slots);

// Exact bounded-palette coloring of g[s]; this is the sanctioned realization
// of the external appeals (the 4-colorable and 3-colorable black boxes).
// Failure means the input was outside the promised class.
std::vector<VertexSet> exact_color_or_fail(const Graph& g, const VertexSet& s, int k,
                                           const char* what, const CaseTrace& trace);

} // namespace kitefree::detail
