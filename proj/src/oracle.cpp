#include "kitefree/oracle.hpp"

#include <algorithm>

namespace kitefree {

int Coloring::colors_used() const
{
    std::vector<char> seen;
    for (int c : colors) {
        if (c < 0)
            continue;
        if (c >= int(seen.size()))
            seen.resize(c + 1, 0);
        seen[c] = 1;
    }
    return int(std::count(seen.begin(), seen.end(), 1));
}

int Coloring::max_color() const
{
    int m = -1;
    for (int c : colors)
        m = std::max(m, c);
    return m;
}

std::pair<int, int> coloring_defect(const Graph& g, const Coloring& c)
{
    if (int(c.colors.size()) != g.size())
        return {0, 0};
    for (int v = 0; v < g.size(); ++v) {
        if (c.colors[v] < 0 || c.colors[v] >= c.bound)
            return {v, v};
        for (int u = g.neighbors(v).next(v); u >= 0; u = g.neighbors(v).next(u))
            if (c.colors[u] == c.colors[v])
                return {v, u};
    }
    return {-1, -1};
}

bool is_proper(const Graph& g, const Coloring& c)
{
    return coloring_defect(g, c).first < 0;
}

namespace {

struct ColorSearch {
    const Graph& g;
    int k;
    std::vector<int> color;
    std::vector<VertexSet> forbidden; // colors already on the neighborhood, as bitmask per vertex
    std::vector<uint32_t> satmask;
    int colored = 0;
    int max_used = 0; // colors 0..max_used-1 are in use

    explicit ColorSearch(const Graph& graph, int budget)
        : g(graph), k(budget), color(graph.size(), -1), satmask(graph.size(), 0)
    {
    }

    int pick_vertex() const
    {
        // max saturation, then max degree, then least id
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.size(); ++v) {
            if (color[v] >= 0)
                continue;
            int sat = __builtin_popcount(satmask[v]);
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve()
    {
        if (colored == g.size())
            return true;
        int v = pick_vertex();
        // new colors only in increasing order: standard isomorph pruning
        int limit = std::min(k, max_used + 1);
        for (int c = 0; c < limit; ++c) {
            if (satmask[v] & (uint32_t(1) << c))
                continue;
            color[v] = c;
            ++colored;
            int prev_max = max_used;
            max_used = std::max(max_used, c + 1);
            std::vector<int> touched;
            for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u)) {
                if (color[u] < 0 && !(satmask[u] & (uint32_t(1) << c))) {
                    satmask[u] |= uint32_t(1) << c;
                    touched.push_back(u);
                }
            }
            if (solve())
                return true;
            for (int u : touched)
                satmask[u] &= ~(uint32_t(1) << c);
            max_used = prev_max;
            --colored;
            color[v] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<Coloring> k_colorable(const Graph& g, int k, int size_bound)
{
    if (g.size() > size_bound)
        throw BoundError("k_colorable: graph exceeds oracle size bound");
    if (k < 0)
        return std::nullopt;
    if (g.size() == 0)
        return Coloring{{}, k};
    if (k == 0)
        return std::nullopt;
    if (k > 31)
        throw std::invalid_argument("k_colorable: color budget above 31");
    ColorSearch s(g, k);
    if (!s.solve())
        return std::nullopt;
    return Coloring{s.color, k};
}

int chromatic_number(const Graph& g, int size_bound)
{
    if (g.size() > size_bound)
        throw BoundError("chromatic_number: graph exceeds oracle size bound");
    for (int k = 0; k <= g.size(); ++k)
        if (k_colorable(g, k, size_bound))
            return k;
    return g.size(); // unreachable: n colors always suffice
}

namespace {

// Greedy-coloring upper bound on the clique candidates, Tomita style.
struct CliqueSearch {
    const Graph& g;
    std::vector<int> best;
    std::vector<int> cur;

    explicit CliqueSearch(const Graph& graph) : g(graph) {}

    void expand(std::vector<int>& cand)
    {
        if (cand.empty()) {
            if (cur.size() > best.size())
                best = cur;
            return;
        }
        // color classes over candidates give the bound
        std::vector<int> col(cand.size());
        std::vector<VertexSet> classes;
        for (size_t i = 0; i < cand.size(); ++i) {
            int v = cand[i];
            size_t c = 0;
            while (c < classes.size() && classes[c].intersects(g.neighbors(v)))
                ++c;
            if (c == classes.size())
                classes.emplace_back(g.size());
            classes[c].set(v);
            col[i] = int(c) + 1;
        }
        // process candidates in descending color
        std::vector<size_t> order(cand.size());
        for (size_t i = 0; i < cand.size(); ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return col[a] < col[b]; });
        std::vector<int> sorted(cand.size());
        std::vector<int> scol(cand.size());
        for (size_t i = 0; i < cand.size(); ++i) {
            sorted[i] = cand[order[i]];
            scol[i] = col[order[i]];
        }
        for (int i = int(sorted.size()) - 1; i >= 0; --i) {
            if (cur.size() + scol[i] <= best.size())
                return;
            int v = sorted[i];
            cur.push_back(v);
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (g.adjacent(sorted[j], v))
                    next.push_back(sorted[j]);
            expand(next);
            cur.pop_back();
        }
    }
};

} // namespace

VertexSet max_clique(const Graph& g, int size_bound)
{
    if (g.size() > size_bound)
        throw BoundError("max_clique: graph exceeds oracle size bound");
    CliqueSearch s(g);
    std::vector<int> cand(g.size());
    for (int v = 0; v < g.size(); ++v)
        cand[v] = v;
    s.expand(cand);
    VertexSet out(g.size());
    for (int v : s.best)
        out.set(v);
    return out;
}

int clique_number(const Graph& g, int size_bound)
{
    return max_clique(g, size_bound).count();
}

std::optional<Coloring> bipartite_2color(const Graph& g)
{
    Coloring c{std::vector<int>(g.size(), -1), 2};
    std::vector<int> queue;
    for (int s = 0; s < g.size(); ++s) {
        if (c.colors[s] >= 0)
            continue;
        c.colors[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u)) {
                if (c.colors[u] < 0) {
                    c.colors[u] = 1 - c.colors[v];
                    queue.push_back(u);
                } else if (c.colors[u] == c.colors[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return c;
}

} // namespace kitefree
