#include "kitefree/patterns.hpp"

#include <map>

namespace kitefree {

Graph cycle_graph(int k)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        e.emplace_back(i, (i + 1) % k);
    return Graph(k, e);
}

Graph cycle_complement(int k)
{
    return complement(cycle_graph(k));
}

Graph complete_graph(int k)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            e.emplace_back(i, j);
    return Graph(k, e);
}

namespace {

Graph path_graph(int k)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i)
        e.emplace_back(i, i + 1);
    return Graph(k, e);
}

// P4 0-1-2-3 plus vertex 4 adjacent to every P4 vertex except the
// degree-one end 3.
Graph kite_graph()
{
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}});
}

std::vector<Pattern> build_catalog()
{
    std::vector<Pattern> c;
    c.push_back({PatternId::P5, "P5", path_graph(5)});
    c.push_back({PatternId::kite, "kite", kite_graph()});
    c.push_back({PatternId::twoK2, "2K2", Graph(4, {{0, 1}, {2, 3}})});
    c.push_back({PatternId::K3plusK1, "K3+K1", Graph(4, {{0, 1}, {0, 2}, {1, 2}})});
    c.push_back({PatternId::C5, "C5", cycle_graph(5)});
    c.push_back({PatternId::C5plusK1, "C5+K1", compose(Compose::disjoint_union, cycle_graph(5), complete_graph(1))});
    c.push_back({PatternId::C6bar, "C6bar", cycle_complement(6)});
    c.push_back({PatternId::C7bar, "C7bar", cycle_complement(7)});
    c.push_back({PatternId::C9bar, "C9bar", cycle_complement(9)});
    for (int t = 1; t <= 7; ++t)
        c.push_back({static_cast<PatternId>(int(PatternId::K1) + t - 1), "K" + std::to_string(t), complete_graph(t)});
    c.push_back({PatternId::C7bar_dominated, "C7bar+dom", compose(Compose::join, cycle_complement(7), complete_graph(1))});
    return c;
}

} // namespace

const std::vector<Pattern>& pattern_catalog()
{
    static const std::vector<Pattern> catalog = build_catalog();
    return catalog;
}

const Pattern& pattern(PatternId id)
{
    for (const Pattern& p : pattern_catalog())
        if (p.id == id)
            return p;
    throw std::invalid_argument("unknown pattern id");
}

std::optional<PatternId> pattern_by_name(const std::string& name)
{
    for (const Pattern& p : pattern_catalog())
        if (p.name == name)
            return p.id;
    return std::nullopt;
}

ClassSpec main_class(int t)
{
    ClassSpec spec;
    spec.name = "main2K2K" + std::to_string(t);
    spec.forbidden = {PatternId::twoK2, PatternId::K3plusK1, PatternId::C5plusK1};
    if (t >= 1 && t <= 7)
        spec.forbidden.push_back(static_cast<PatternId>(int(PatternId::K1) + t - 1));
    else
        spec.forbidden_clique = t;
    return spec;
}

std::optional<ClassSpec> class_by_name(const std::string& name)
{
    if (name == "P5kite")
        return ClassSpec{name, {PatternId::P5, PatternId::kite}, 0};
    if (name == "P5kiteK6")
        return ClassSpec{name, {PatternId::P5, PatternId::kite, PatternId::K6}, 0};
    if (name == "base2K2")
        return ClassSpec{name, {PatternId::twoK2, PatternId::K3plusK1, PatternId::C5plusK1}, 0};
    if (name == "c5free2K2K6")
        return ClassSpec{name, {PatternId::twoK2, PatternId::K3plusK1, PatternId::C5, PatternId::K6}, 0};
    if (name == "c5free2K2K5")
        return ClassSpec{name, {PatternId::twoK2, PatternId::K3plusK1, PatternId::C5, PatternId::K5}, 0};
    if (name == "c9barfree2K2K5")
        return ClassSpec{name, {PatternId::twoK2, PatternId::K3plusK1, PatternId::C5, PatternId::K5, PatternId::C9bar}, 0};
    if (name.rfind("main2K2K", 0) == 0) {
        try {
            size_t used = 0;
            int t = std::stoi(name.substr(8), &used);
            if (used == name.size() - 8 && t >= 1)
                return main_class(t);
        } catch (const std::exception&) {
        }
    }
    return std::nullopt;
}

std::vector<std::string> registered_class_names()
{
    return {"P5kite", "P5kiteK6", "base2K2", "main2K2K6", "main2K2K7",
            "c5free2K2K6", "c5free2K2K5", "c9barfree2K2K5"};
}

} // namespace kitefree
