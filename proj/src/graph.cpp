#include "kitefree/graph.hpp"

#include <algorithm>

namespace kitefree {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    adj_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[u].set(v);
        adj_[v].set(u);
    }
}

long long Graph::edge_count() const
{
    long long twice = 0;
    for (int v = 0; v < n_; ++v)
        twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

VertexSet Graph::all_vertices() const
{
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v)
        s.set(v);
    return s;
}

VertexSet Graph::non_neighbors(int v) const
{
    VertexSet s = all_vertices();
    s -= adj_[v];
    s.reset(v);
    return s;
}

Graph complement(const Graph& g)
{
    int n = g.size();
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                e.emplace_back(u, v);
    return Graph(n, e);
}

Graph compose(Compose kind, const Graph& g, const Graph& h)
{
    int ng = g.size(), nh = h.size();
    std::vector<std::pair<int, int>> e = g.edges();
    for (auto [u, v] : h.edges())
        e.emplace_back(u + ng, v + ng);
    if (kind == Compose::join)
        for (int u = 0; u < ng; ++u)
            for (int v = 0; v < nh; ++v)
                e.emplace_back(u, ng + v);
    return Graph(ng + nh, e);
}

RelationResult set_relation(const Graph& g, const VertexSet& s, const VertexSet& t)
{
    if (s.intersects(t))
        throw std::invalid_argument("set_relation: sets overlap");
    if (s.empty() || t.empty())
        return {SetRelation::complete, true};
    bool all = true, none = true;
    for (int u = s.first(); u >= 0; u = s.next(u)) {
        if (g.neighbors(u).intersects(t))
            none = false;
        VertexSet missing = t - g.neighbors(u);
        if (missing.any())
            all = false;
        if (!all && !none)
            return {SetRelation::mixed, false};
    }
    return {all ? SetRelation::complete : SetRelation::anticomplete, false};
}

bool is_stable_set(const Graph& g, const VertexSet& s)
{
    return find_internal_edge(g, s).first < 0;
}

bool is_clique(const Graph& g, const VertexSet& s)
{
    for (int u = s.first(); u >= 0; u = s.next(u)) {
        VertexSet rest = s - g.neighbors(u);
        rest.reset(u);
        if (rest.any())
            return false;
    }
    return true;
}

bool complete_between(const Graph& g, const VertexSet& s, const VertexSet& t)
{
    for (int u = s.first(); u >= 0; u = s.next(u)) {
        VertexSet missing = t - g.neighbors(u);
        missing.reset(u);
        if (missing.any())
            return false;
    }
    return true;
}

bool anticomplete_between(const Graph& g, const VertexSet& s, const VertexSet& t)
{
    return find_cross_edge(g, s, t).first < 0;
}

std::pair<int, int> find_internal_edge(const Graph& g, const VertexSet& s)
{
    for (int u = s.first(); u >= 0; u = s.next(u)) {
        VertexSet hit = s & g.neighbors(u);
        int v = hit.next(u);
        if (v >= 0)
            return {u, v};
    }
    return {-1, -1};
}

std::pair<int, int> find_cross_edge(const Graph& g, const VertexSet& s, const VertexSet& t)
{
    for (int u = s.first(); u >= 0; u = s.next(u)) {
        VertexSet hit = t & g.neighbors(u);
        if (hit.any())
            return {u, hit.first()};
    }
    return {-1, -1};
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s)
{
    std::vector<int> map = s.to_vector();
    std::vector<int> inv(g.size(), -1);
    for (size_t i = 0; i < map.size(); ++i)
        inv[map[i]] = int(i);
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges())
        if (inv[u] >= 0 && inv[v] >= 0)
            e.emplace_back(inv[u], inv[v]);
    return {Graph(int(map.size()), e), map};
}

} // namespace kitefree
