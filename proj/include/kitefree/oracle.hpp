#pragma once

#include <optional>
#include <vector>

#include "kitefree/errors.hpp"
#include "kitefree/graph.hpp"

namespace kitefree {

// Vertex -> color assignment (0-based) together with the color budget it
// certifies. colors[v] == -1 marks an uncolored vertex in partial colorings.
struct Coloring {
    std::vector<int> colors;
    int bound = 0;

    int colors_used() const;
    int max_color() const; // -1 when nothing is colored
};

// First offending edge (same color on both ends, or color out of budget as
// {v,v}), or {-1,-1} when the coloring is proper and within budget.
std::pair<int, int> coloring_defect(const Graph& g, const Coloring& c);
bool is_proper(const Graph& g, const Coloring& c);

inline constexpr int kDefaultOracleBound = 40;

// Exact k-colorability by saturation-ordered backtracking with color
// symmetry breaking. Throws BoundError when n exceeds size_bound.
std::optional<Coloring> k_colorable(const Graph& g, int k, int size_bound = kDefaultOracleBound);

// Least k admitting a proper k-coloring; 0 for the empty graph.
int chromatic_number(const Graph& g, int size_bound = kDefaultOracleBound);

// Exact maximum clique via branch and bound with greedy-coloring bounds.
int clique_number(const Graph& g, int size_bound = kDefaultOracleBound);
VertexSet max_clique(const Graph& g, int size_bound = kDefaultOracleBound);

// BFS 2-coloring; absent iff an odd cycle exists. No size bound.
std::optional<Coloring> bipartite_2color(const Graph& g);

} // namespace kitefree
