#pragma once

#include <cstdint>

#include "nextsp/graph.hpp"

namespace nsp {

// Seeded instance generators. Output depends only on the arguments.

/// Each ordered pair (u,v), u != v, becomes an edge with probability p; weights
/// uniform in [1, w_max]. s = 0, t = n-1.
WeightedDigraph gen_random(Vertex n, double p, Weight w_max, std::uint64_t seed);

/// An (s,t)-layered graph: `layers` distance layers with s alone in the first
/// and t alone in the last, `width` vertices in every other layer, unit
/// forward edges between consecutive layers (each vertex gets at least one in
/// and one out), and `back_edges` edges into strictly earlier layers with
/// weights uniform in [1, w_max]. Throws std::invalid_argument when the
/// request cannot be met.
WeightedDigraph gen_layered(int layers, int width, int back_edges, std::uint64_t seed, Weight w_max = 5);

/// Random DAG on n vertices: edge (u,v) for u < v with probability p, unit weights.
WeightedDigraph gen_dag(Vertex n, double p, std::uint64_t seed);

}  // namespace nsp
