#pragma once

#include <cstdint>

#include "polarmin/graph.hpp"

namespace polarmin {

// Deterministic toy-graph generators for experiments, validation runs and
// tests.  All randomness derives from the given seed.

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);        // vertex 0 is the center
Graph complete_graph(int n);
Graph grid_graph(int rows, int cols);
Graph balanced_binary_tree(int depth);  // depth 0: single vertex

// Ring 0-1-...-n-1-0 plus `chords_per_node * n` random chords (duplicates
// and self-loops re-drawn).  Connected by construction, expander-like.
Graph ring_with_chords(int n, int chords_per_node, std::uint64_t seed);

// G(n, p) with p chosen for the given expected average degree; components
// are stitched together afterwards so the result is always connected.
Graph sparse_random_graph(int n, double avg_degree, std::uint64_t seed);

// Copy of g with weights drawn uniformly from [w_lo, w_hi].
Graph randomize_weights(const Graph& g, double w_lo, double w_hi,
                        std::uint64_t seed);

}  // namespace polarmin
