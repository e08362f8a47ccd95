#include "nextsp/solver.hpp"

namespace nsp {

SolveReport solve_detailed(const WeightedDigraph& g, const SolveOptions& options) {
  SolveReport report;
  const auto d = shortest_distances(g);
  if (!d.source_to_sink()) return report;

  report.reduction = layerize(straighten(g));
  const LayeredView view(report.reduction.graph);
  report.layered = next_sp_layered(view, {options.threads}, &report.stats);

  // Each option is checked and weighed in the original graph.
  const auto admit = [&](const PathSeq& p) -> Weight {
    if (!is_not_shortest_path(g, d, p)) {
      throw InternalError("reduction produced a path that is not a not-shortest path of the input");
    }
    return validate_path(g, d, p).weight;
  };

  const auto& candidates = report.reduction.trace.candidates;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Weight w = admit(candidates[i].lifted);
    if (w > candidates[i].generated_weight) throw InternalError("lifting increased a candidate's weight");
    if (!report.outcome.found() || w < report.outcome.weight()) {
      report.outcome = SolveOutcome::of(candidates[i].lifted, w);
      report.winning_candidate = i;
    }
  }
  if (report.layered.found()) {
    PathSeq lifted = lift_layered_path(report.reduction.trace, report.layered.path());
    const Weight w = admit(lifted);
    if (w > report.layered.weight()) throw InternalError("lifting increased the layered answer's weight");
    if (!report.outcome.found() || w < report.outcome.weight()) {
      report.outcome = SolveOutcome::of(std::move(lifted), w);
      report.winning_candidate.reset();
    }
  }
  return report;
}

SolveOutcome solve(const WeightedDigraph& g, const SolveOptions& options) {
  return solve_detailed(g, options).outcome;
}

}  // namespace nsp
