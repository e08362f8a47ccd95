#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "nextsp/structure.hpp"

namespace nsp {

using VertexPair = std::pair<Vertex, Vertex>;

/// Removal of a vertex that violates straightness with finite distances.
/// Every in-neighbour x and out-neighbour y (x != y) is joined by an edge of
/// weight min(w(x,y), w(x,u) + w(u,y)); pairs whose weight was created or
/// strictly lowered are the shortcut edges.
struct EliminationRecord {
  Vertex removed = 0;
  std::vector<Vertex> in_neighbors;
  std::vector<Vertex> out_neighbors;
  std::vector<VertexPair> shortcut_edges;        // ascending
  std::map<VertexPair, Weight> replaced_weights;  // prior weight of lowered edges

  bool is_shortcut(Vertex tail, Vertex head) const;

  friend bool operator==(const EliminationRecord&, const EliminationRecord&) = default;
};

/// Deletion of a vertex that lies on no s->t path.
struct VertexDeletion {
  Vertex removed = 0;
  friend bool operator==(const VertexDeletion&, const VertexDeletion&) = default;
};

struct BackEdgeRemoval {
  Edge edge;
  friend bool operator==(const BackEdgeRemoval&, const BackEdgeRemoval&) = default;
};

/// A forward edge (u,v) replaced by u -> chain[0] -> ... -> chain[k-1] -> v.
/// layer_values holds q_0 = d(s,u) < q_1 < ... < q_{k+1} = d(s,v).
struct SubdivisionRecord {
  Edge original;
  std::vector<Vertex> chain;
  std::vector<Weight> layer_values;
  friend bool operator==(const SubdivisionRecord&, const SubdivisionRecord&) = default;
};

using ReductionStep = std::variant<VertexDeletion, EliminationRecord, BackEdgeRemoval, SubdivisionRecord>;

/// A not-shortest path produced mid-reduction.
struct Candidate {
  PathSeq generated;         // in the graph where it was produced
  Weight generated_weight = 0;
  std::size_t step = 0;      // number of trace steps applied when it was produced
  PathSeq lifted;            // the same path mapped back to the original graph
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  std::vector<Candidate> candidates;
};

struct Reduced {
  WeightedDigraph graph;
  ReductionTrace trace;
};

/// Removes u, which must satisfy d(s,u)+d(u,t) > d(s,t) with both finite and u not in {s,t}.
std::pair<WeightedDigraph, EliminationRecord> eliminate_vertex(const WeightedDigraph& g, Vertex u);

/// Maps a path of the reduced graph back through one elimination: identity
/// when no shortcut edge is used, otherwise the stretch from the first
/// shortcut's tail to the last shortcut's head is replaced by (tail, u, head).
PathSeq lift_pi_prime(const EliminationRecord& rec, const PathSeq& path);

/// Repeatedly deletes or eliminates the smallest-id vertex violating
/// straightness, collecting the candidate paths that elimination would lose.
/// Requires an s->t path.
Reduced straighten(const WeightedDigraph& g);

/// Turns a straight graph into a layered one by removing offending back-edges
/// (recording a candidate for each) and subdividing layer-skipping forward
/// edges. Steps and candidates are appended to the incoming trace so that
/// lifting reaches the graph the trace started from.
Reduced layerize(Reduced straight);
Reduced layerize(const WeightedDigraph& straight);

/// Number of edges violating layeredness in a straight graph.
std::size_t potential_phi(const WeightedDigraph& g, const DistanceTable& d);

/// The first violating edge in deterministic order: back-edge violations by
/// (tail, head) first, then forward-edge violations.
std::optional<Edge> select_violating_edge(const WeightedDigraph& g, const DistanceTable& d);

struct LiftedPath {
  PathSeq path;
  bool crossed_shortcut = false;
};

/// Lifts a path of the graph reached after the first `step_count` steps back
/// to the trace's starting graph.
LiftedPath lift_through(const ReductionTrace& trace, std::size_t step_count, const PathSeq& path);

/// Lifts a path of the final (layered) graph back to the original graph.
PathSeq lift_layered_path(const ReductionTrace& trace, const PathSeq& path);

void apply_step(WeightedDigraph& g, const ReductionStep& step);
WeightedDigraph replay(const WeightedDigraph& original, const ReductionTrace& trace);

void dump_trace(std::ostream& out, const ReductionTrace& trace, int decimals = 0);

}  // namespace nsp
