#include "kitefree/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kitefree/patterns.hpp"

namespace kitefree {

Graph tight_example(int n, bool plus_k1)
{
    if (n < 1)
        throw std::invalid_argument("tight_example: n must be >= 1");
    Graph g = complement(cycle_graph(5));
    for (int i = 1; i < n; ++i)
        g = compose(Compose::join, g, complement(cycle_graph(5)));
    if (plus_k1)
        g = compose(Compose::join, g, complete_graph(1));
    return g;
}

Graph c5_blowup(const std::array<int, 5>& sizes)
{
    std::array<int, 5> start{};
    int n = 0;
    for (int i = 0; i < 5; ++i) {
        if (sizes[i] < 1)
            throw std::invalid_argument("c5_blowup: group sizes must be >= 1");
        start[i] = n;
        n += sizes[i];
    }
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        for (int x = 0; x < sizes[i]; ++x)
            for (int y = 0; y < sizes[j]; ++y)
                e.emplace_back(start[i] + x, start[j] + y);
    }
    return Graph(n, e);
}

Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    const uint64_t threshold = uint64_t(p * double(UINT64_MAX));
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() < threshold)
                e.emplace_back(u, v);
    return Graph(n, e);
}

namespace {

// bounded draw without uniform_int_distribution, whose output is not
// pinned down by the standard
uint64_t draw(std::mt19937_64& rng, uint64_t bound)
{
    return rng() % bound;
}

std::optional<Graph> structured_sample(std::mt19937_64& rng, int n, const ClassSpec& cls,
                                       int attempts)
{
    for (int t = 0; t < attempts; ++t) {
        int extras = int(draw(rng, uint64_t(std::min(4, n - 5) + 1)));
        int core = n - extras;
        std::array<int, 5> sizes{1, 1, 1, 1, 1};
        for (int k = 5; k < core; ++k)
            sizes[draw(rng, 5)]++;
        Graph g = c5_blowup(sizes);
        std::vector<std::pair<int, int>> e = g.edges();
        double q = 0.5 + 0.1 * double(draw(rng, 5));
        const uint64_t threshold = uint64_t(q * double(UINT64_MAX));
        for (int x = 0; x < extras; ++x) {
            int v = core + x;
            for (int u = 0; u < v; ++u)
                if (rng() < threshold)
                    e.emplace_back(u, v);
        }
        Graph candidate(n, e);
        if (class_check(candidate, cls).member)
            return candidate;
    }
    return std::nullopt;
}

} // namespace

std::optional<Graph> random_in_class(uint64_t seed, int n, const ClassSpec& cls,
                                     int rejection_bound)
{
    std::mt19937_64 rng(seed);
    if (n <= rejection_bound) {
        for (double p : {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8})
            for (int t = 0; t < 200; ++t) {
                Graph g = random_graph(n, p, rng);
                if (class_check(g, cls).member)
                    return g;
            }
        return std::nullopt;
    }
    if (n < 6)
        return std::nullopt;
    return structured_sample(rng, n, cls, 400);
}

void enumerate_small(int n, const ClassSpec& cls, const std::function<void(const Graph&)>& fn,
                     bool dedup_iso)
{
    if (n < 0 || n > 7)
        throw BoundError("enumerate_small: n must be between 0 and 7");
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> idx;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            idx.emplace_back(u, v);

    std::set<uint64_t> seen;
    std::vector<int> perm(n);

    for (uint64_t mask = 0; mask < (uint64_t(1) << pairs); ++mask) {
        std::vector<std::pair<int, int>> e;
        for (int k = 0; k < pairs; ++k)
            if (mask & (uint64_t(1) << k))
                e.push_back(idx[k]);
        Graph g(n, e);
        if (!class_check(g, cls).member)
            continue;
        if (dedup_iso) {
            uint64_t canon = ~uint64_t(0);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                uint64_t m = 0;
                for (int k = 0; k < pairs; ++k)
                    if (g.adjacent(perm[idx[k].first], perm[idx[k].second]))
                        m |= uint64_t(1) << k;
                canon = std::min(canon, m);
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (!seen.insert(canon).second)
                continue;
        }
        fn(g);
    }
}

} // namespace kitefree
