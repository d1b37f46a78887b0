#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "kitefree/detect.hpp"
#include "kitefree/errors.hpp"
#include "kitefree/graph.hpp"

namespace kitefree {

// Join of n copies of complement(C5), optionally with a join apex. Built as
// an iterated join so vertex labels group by factor. omega = 2n (+1), and
// chi = 3n (+1) wherever the oracle can confirm it.
Graph tight_example(int n, bool plus_k1);

// Five stable sets, cyclically complete to neighbors and anticomplete to
// non-neighbors; group i occupies a consecutive id range of length sizes[i].
Graph c5_blowup(const std::array<int, 5>& sizes);

// G(n, p) with edge probability p; mt19937_64 keeps draws reproducible.
Graph random_graph(int n, double p, std::mt19937_64& rng);

// Seeded, reproducible member of the class, or nullopt when the sample
// budget runs out. Rejection sampling with an edge-probability sweep up to
// rejection_bound vertices; blow-up-shaped structured sampling above it.
std::optional<Graph> random_in_class(uint64_t seed, int n, const ClassSpec& cls,
                                     int rejection_bound = 12);

// All labeled graphs on n <= 7 vertices inside the class, streamed in mask
// order. With dedup_iso, only the first representative of each isomorphism
// class is emitted (canonical adjacency minimization over all labelings).
void enumerate_small(int n, const ClassSpec& cls, const std::function<void(const Graph&)>& fn,
                     bool dedup_iso = false);

} // namespace kitefree
