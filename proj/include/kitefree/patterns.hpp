#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kitefree/graph.hpp"

namespace kitefree {

// Fixed small pattern graphs. Cyclic complements (C6bar/C7bar/C9bar) are
// labeled so that consecutive template vertices are NON-adjacent; C5 is
// labeled so that consecutive template vertices are adjacent.
enum class PatternId {
    P5,
    kite,
    twoK2,
    K3plusK1,
    C5,
    C5plusK1,
    C6bar,
    C7bar,
    C9bar,
    K1,
    K2,
    K3,
    K4,
    K5,
    K6,
    K7,
    C7bar_dominated, // \overline{C7} ∨ K1
};

struct Pattern {
    PatternId id;
    std::string name;
    Graph tmpl;
};

const Pattern& pattern(PatternId id);
const std::vector<Pattern>& pattern_catalog();
std::optional<PatternId> pattern_by_name(const std::string& name);

// Cycle and complement-of-cycle templates for arbitrary length (used by the
// odd hole/antihole enumerator).
Graph cycle_graph(int k);
Graph cycle_complement(int k); // labeled with consecutive vertices non-adjacent
Graph complete_graph(int k);

// A named forbidden-induced-subgraph family.
struct ClassSpec {
    std::string name;
    std::vector<PatternId> forbidden;
    int forbidden_clique = 0; // >0 adds K_t-freeness for t beyond the pattern catalog
};

// Registered ids: P5kite, P5kiteK6, base2K2, main2K2K6, main2K2K7,
// c5free2K2K6, c5free2K2K5, c9barfree2K2K5, plus main2K2K<t> for t >= 4.
std::optional<ClassSpec> class_by_name(const std::string& name);
std::vector<std::string> registered_class_names();

// The class hypothesis of the t-parameterized coloring entry point:
// (2K2, K3+K1, C5+K1, K_t)-free.
ClassSpec main_class(int t);

} // namespace kitefree
