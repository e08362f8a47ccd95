#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "nextsp/disjoint_paths.hpp"

namespace nsp {

// Brute-force references for desk-scale verification. Nothing here shares code
// with the solver beyond the graph type.

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Calls `visit(path, weight)` for every simple from->to path, in DFS order with
/// ascending neighbour ids. Every DFS extension is charged against `budget`;
/// throws BudgetExceeded when it runs out.
void for_each_simple_path(const WeightedDigraph& g, Vertex from, Vertex to, std::uint64_t budget,
                          const std::function<void(const PathSeq&, Weight)>& visit);

/// Minimum-weight simple s->t path among those strictly heavier than the
/// lightest one, or none. Ties keep the first path in enumeration order.
SolveOutcome oracle_next_sp(const WeightedDigraph& g, std::uint64_t budget = kDefaultBudget);

/// Exhaustive search over pairs of paths.
std::optional<DisjointPaths> oracle_2vdp(const WeightedDigraph& dag, TerminalPair first, TerminalPair second,
                                         std::uint64_t budget = kDefaultBudget);

}  // namespace nsp
