#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kitefree/bitset.hpp"

namespace kitefree {

// Immutable simple undirected graph on dense vertex ids 0..n-1.
// Adjacency is symmetric and loop-free by construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const; // sorted (u < v)

    VertexSet all_vertices() const;
    VertexSet non_neighbors(int v) const; // V \ (N(v) ∪ {v})

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

Graph complement(const Graph& g);

enum class Compose { disjoint_union, join };

// disjoint_union relabels h's vertices after g's; join adds all cross edges.
Graph compose(Compose kind, const Graph& g, const Graph& h);

enum class SetRelation { complete, anticomplete, mixed };

// rel == complete when every cross pair is adjacent, anticomplete when none is.
// When either set is empty both hold; we report complete with vacuous = true.
struct RelationResult {
    SetRelation rel;
    bool vacuous;
};

// Requires s ∩ t = ∅; throws std::invalid_argument otherwise.
RelationResult set_relation(const Graph& g, const VertexSet& s, const VertexSet& t);

bool is_stable_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

// Vacuously true on empty sides. Unlike set_relation, the sets may overlap;
// only cross pairs of distinct vertices are examined.
bool complete_between(const Graph& g, const VertexSet& s, const VertexSet& t);
bool anticomplete_between(const Graph& g, const VertexSet& s, const VertexSet& t);

// First edge inside s, or nullopt-style {-1,-1}.
std::pair<int, int> find_internal_edge(const Graph& g, const VertexSet& s);
// First cross edge between s and t, or {-1,-1}.
std::pair<int, int> find_cross_edge(const Graph& g, const VertexSet& s, const VertexSet& t);

// New graph on s with dense ids; map[new_id] = old_id (ascending).
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s);

} // namespace kitefree
