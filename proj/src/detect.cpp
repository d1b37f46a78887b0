#include "kitefree/detect.hpp"

#include <algorithm>
#include <numeric>

namespace kitefree {

bool verify_embedding(const Graph& host, const Embedding& emb)
{
    const Graph& t = pattern(emb.pattern_id).tmpl;
    int k = t.size();
    if (int(emb.map.size()) != k)
        return false;
    for (int i = 0; i < k; ++i) {
        int h = emb.map[i];
        if (h < 0 || h >= host.size())
            return false;
        for (int j = i + 1; j < k; ++j) {
            if (emb.map[j] == h)
                return false;
            if (t.adjacent(i, j) != host.adjacent(h, emb.map[j]))
                return false;
        }
    }
    return true;
}

namespace {

struct Matcher {
    const Graph& host;
    const Graph& tmpl;
    std::vector<int> order;   // template vertices, most-constrained first
    std::vector<int> assign;  // template vertex -> host vertex or -1
    VertexSet used;
    const std::function<bool(const Embedding&)>* fn;
    PatternId id;
    bool stopped = false;

    Matcher(const Graph& h, const Pattern& p) : host(h), tmpl(p.tmpl), id(p.id)
    {
        order.resize(tmpl.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return tmpl.degree(a) > tmpl.degree(b);
        });
        assign.assign(tmpl.size(), -1);
        used = VertexSet(host.size());
    }

    bool extend(size_t depth)
    {
        if (depth == order.size()) {
            Embedding emb{id, assign};
            if ((*fn)(emb))
                stopped = true;
            return stopped;
        }
        int pv = order[depth];
        for (int hv = 0; hv < host.size(); ++hv) {
            if (used.test(hv) || host.degree(hv) < tmpl.degree(pv))
                continue;
            bool ok = true;
            for (size_t d = 0; d < depth; ++d) {
                int qv = order[d];
                if (tmpl.adjacent(pv, qv) != host.adjacent(hv, assign[qv])) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            assign[pv] = hv;
            used.set(hv);
            if (extend(depth + 1))
                return true;
            used.reset(hv);
            assign[pv] = -1;
        }
        return false;
    }
};

} // namespace

bool for_each_induced(const Graph& host, const Pattern& p,
                      const std::function<bool(const Embedding&)>& fn)
{
    if (p.tmpl.size() > host.size())
        return false;
    Matcher m(host, p);
    m.fn = &fn;
    m.extend(0);
    return m.stopped;
}

std::optional<Embedding> find_induced(const Graph& host, const Pattern& p)
{
    if (p.tmpl.size() > 10)
        throw std::invalid_argument("pattern too large for matcher");
    std::optional<Embedding> found;
    for_each_induced(host, p, [&](const Embedding& e) {
        found = e;
        return true;
    });
    return found;
}

std::optional<Embedding> find_induced(const Graph& host, PatternId id)
{
    return find_induced(host, pattern(id));
}

ClassReport class_check(const Graph& g, const ClassSpec& spec)
{
    ClassReport rep;
    rep.class_id = spec.name;
    for (PatternId pid : spec.forbidden) {
        if (auto emb = find_induced(g, pid))
            rep.violations.push_back({pattern(pid).name, pid, emb->map});
    }
    if (spec.forbidden_clique > 0) {
        if (auto q = find_clique_of_size(g, spec.forbidden_clique))
            rep.violations.push_back({"K" + std::to_string(spec.forbidden_clique), std::nullopt, q->to_vector()});
    }
    rep.member = rep.violations.empty();
    return rep;
}

ClassReport class_check(const Graph& g, const std::string& class_id)
{
    auto spec = class_by_name(class_id);
    if (!spec)
        throw std::invalid_argument("unknown class id: " + class_id);
    return class_check(g, *spec);
}

std::optional<DominatedC7bar> find_dominated_c7bar(const Graph& g)
{
    std::optional<DominatedC7bar> found;
    for_each_induced(g, pattern(PatternId::C7bar), [&](const Embedding& e) {
        VertexSet image(g.size());
        for (int v : e.map)
            image.set(v);
        for (int w = 0; w < g.size(); ++w) {
            if (image.test(w))
                continue;
            if (image.is_subset_of(g.neighbors(w))) {
                found = DominatedC7bar{e, w};
                return true;
            }
        }
        return false;
    });
    return found;
}

std::optional<OddHoleWitness> find_odd_hole_or_antihole(const Graph& g, int size_bound)
{
    if (g.size() > size_bound)
        throw BoundError("odd hole search: graph exceeds size bound");
    for (int k = 5; k <= g.size(); k += 2) {
        Pattern hole{PatternId::C5, "C" + std::to_string(k), cycle_graph(k)};
        std::optional<OddHoleWitness> found;
        for_each_induced(g, hole, [&](const Embedding& e) {
            found = OddHoleWitness{false, e.map};
            return true;
        });
        if (found)
            return found;
        if (k >= 7) {
            Pattern anti{PatternId::C7bar, "C" + std::to_string(k) + "bar", cycle_complement(k)};
            for_each_induced(g, anti, [&](const Embedding& e) {
                found = OddHoleWitness{true, e.map};
                return true;
            });
            if (found)
                return found;
        }
    }
    return std::nullopt;
}

std::vector<std::vector<int>> dihedral_maps(int k)
{
    std::vector<std::vector<int>> maps;
    maps.reserve(2 * k);
    for (int r = 0; r < k; ++r) {
        std::vector<int> m(k);
        for (int i = 0; i < k; ++i)
            m[i] = (i + r) % k;
        maps.push_back(std::move(m));
    }
    for (int r = 0; r < k; ++r) {
        std::vector<int> m(k);
        for (int i = 0; i < k; ++i)
            m[i] = ((r - i) % k + k) % k;
        maps.push_back(std::move(m));
    }
    return maps;
}

Embedding apply_relabeling(const Embedding& emb, const std::vector<int>& perm)
{
    Embedding out{emb.pattern_id, std::vector<int>(emb.map.size())};
    for (size_t i = 0; i < perm.size(); ++i)
        out.map[i] = emb.map[perm[i]];
    return out;
}

namespace {

bool extend_clique(const Graph& g, std::vector<int>& cur, VertexSet& cand, int k)
{
    if (int(cur.size()) == k)
        return true;
    if (int(cur.size()) + cand.count() < k)
        return false;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
        VertexSet next = cand & g.neighbors(v);
        // candidates stay above v to keep the enumeration lexicographic
        for (int u = next.first(); u >= 0 && u <= v; u = next.next(u))
            next.reset(u);
        cur.push_back(v);
        if (extend_clique(g, cur, next, k))
            return true;
        cur.pop_back();
        cand.reset(v);
    }
    return false;
}

} // namespace

std::optional<VertexSet> find_clique_of_size(const Graph& g, int k)
{
    if (k <= 0)
        return VertexSet(g.size());
    if (k > g.size())
        return std::nullopt;
    std::vector<int> cur;
    VertexSet cand = g.all_vertices();
    if (!extend_clique(g, cur, cand, k))
        return std::nullopt;
    VertexSet out(g.size());
    for (int v : cur)
        out.set(v);
    return out;
}

} // namespace kitefree
