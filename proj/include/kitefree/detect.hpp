#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kitefree/errors.hpp"
#include "kitefree/graph.hpp"
#include "kitefree/patterns.hpp"

namespace kitefree {

// Injective map witnessing an induced copy of a pattern: map[i] is the host
// vertex playing template vertex i. For cyclic patterns the template labeling
// carries the ring convention, so the map does too.
struct Embedding {
    PatternId pattern_id;
    std::vector<int> map;
};

// Induced check: adjacency and non-adjacency both preserved.
bool verify_embedding(const Graph& host, const Embedding& emb);

// Deterministic backtracking matcher; the returned witness is the least one
// under the matcher's fixed vertex order. Patterns are capped at 10 vertices.
std::optional<Embedding> find_induced(const Graph& host, const Pattern& p);
std::optional<Embedding> find_induced(const Graph& host, PatternId id);

// Enumerates embeddings in matcher order until fn returns true; returns
// whether the enumeration was stopped early.
bool for_each_induced(const Graph& host, const Pattern& p,
                      const std::function<bool(const Embedding&)>& fn);

struct Violation {
    std::string pattern_name;
    std::optional<PatternId> pattern_id; // absent for K_t witnesses beyond the catalog
    std::vector<int> witness;            // embedding map, or clique vertices when pattern_id is absent
};

struct ClassReport {
    std::string class_id;
    bool member = false;
    std::vector<Violation> violations;
};

ClassReport class_check(const Graph& g, const ClassSpec& spec);
ClassReport class_check(const Graph& g, const std::string& class_id); // throws std::invalid_argument on unknown id

// A C7bar embedding together with a vertex complete to its image, if any.
struct DominatedC7bar {
    Embedding emb;
    int dominator;
};
std::optional<DominatedC7bar> find_dominated_c7bar(const Graph& g);

// An induced odd cycle of length >= 5 or the complement of one, listed in
// ring order (for antiholes, consecutive ring positions are non-adjacent).
struct OddHoleWitness {
    bool antihole;
    std::vector<int> ring;
};

// Brute-force enumeration of induced odd holes and odd antiholes; absent
// means the graph is perfect. Throws BoundError when n exceeds the
// desk-scale bound.
std::optional<OddHoleWitness> find_odd_hole_or_antihole(const Graph& g, int size_bound = 16);

// All 2k index permutations of a k-ring (k rotations, then k reflections),
// in a fixed order. relabeled[i] = original[perm[i]] preserves the ring
// convention of cyclic embeddings.
std::vector<std::vector<int>> dihedral_maps(int k);
Embedding apply_relabeling(const Embedding& emb, const std::vector<int>& perm);

// Least clique of the given size in lexicographic DFS order, if one exists.
std::optional<VertexSet> find_clique_of_size(const Graph& g, int k);

} // namespace kitefree
