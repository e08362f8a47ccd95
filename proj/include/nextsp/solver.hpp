#pragma once

#include "nextsp/layered_solver.hpp"
#include "nextsp/reduction.hpp"

namespace nsp {

struct SolveOptions {
  unsigned threads = 1;
};

struct SolveReport {
  SolveOutcome outcome;
  /// Empty graph and trace when the input has no s->t path.
  Reduced reduction;
  /// The layered solver's answer in layered-graph coordinates.
  SolveOutcome layered;
  LayeredStats stats;
  /// Index into reduction.trace.candidates when a reduction candidate won.
  std::optional<std::size_t> winning_candidate;
};

/// Next-to-shortest path of an arbitrary positively weighted digraph:
/// straighten, layerize, solve the layered graph, lift back, and take the
/// minimum with every candidate recorded along the way. Ties prefer earlier
/// candidates, then the layered answer.
SolveReport solve_detailed(const WeightedDigraph& g, const SolveOptions& options = {});
SolveOutcome solve(const WeightedDigraph& g, const SolveOptions& options = {});

}  // namespace nsp
