#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "nextsp/disjoint_paths.hpp"

namespace nsp {

/// Split of a not-shortest path at its first and last back-edge:
/// prefix = s..A, middle = A..B (starts and ends with a back-edge), suffix = B..t.
struct BackEdgeDecomposition {
  Vertex a = 0;
  Vertex b = 0;
  PathSeq prefix;
  PathSeq middle;
  PathSeq suffix;
};

/// nullopt when the path has no back-edge, i.e. it is a shortest path.
std::optional<BackEdgeDecomposition> decompose(const WeightedDigraph& g, const DistanceTable& d,
                                               const PathSeq& path);

/// Shortest a->b path in the subgraph induced by the unblocked vertices plus a
/// and b, over edges of either kind.
std::optional<PathSeq> residual_middle_path(const WeightedDigraph& g, std::span<const Vertex> blocked,
                                            Vertex a, Vertex b);

struct LayeredOptions {
  unsigned threads = 1;
};

struct LayeredStats {
  std::uint64_t tuples = 0;           // tuples handed to constrained_pdfp
  std::uint64_t feasible = 0;         // of those, with a disjoint forward pair
  std::uint64_t pruned = 0;           // skipped by the distance lower bound
  std::uint64_t improvements = 0;     // times the running minimum dropped
};

/// Next-to-shortest path of an (s,t)-layered graph, or none.
///
/// Enumerates A, B over back-edge endpoints with layer(A) > layer(B) in
/// ascending id order, then pairs of forward edges leaving a common layer in
/// lexicographic order. Each tuple with a disjoint forward pair is completed
/// by a shortest A->B path in the residual graph. Ties keep the first tuple
/// in that order; the result is identical for every thread count.
SolveOutcome next_sp_layered(const WeightedDigraph& g, const LayeredOptions& options = {},
                             LayeredStats* stats = nullptr);
SolveOutcome next_sp_layered(const LayeredView& view, const LayeredOptions& options = {},
                             LayeredStats* stats = nullptr);

}  // namespace nsp
