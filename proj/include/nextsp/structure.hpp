#pragma once

#include <optional>
#include <vector>

#include "nextsp/distances.hpp"

namespace nsp {

// Back: d(s,u) + w(u,v) > d(s,v). Forward: equality.
enum class EdgeKind { Back, Forward };

/// Classifies one edge. Throws ContractViolation if the tail is unreachable from s.
EdgeKind edge_kind(const DistanceTable& d, const Edge& e);

struct EdgeClassification {
  std::vector<Edge> back;                // E_B, (tail, head) ascending
  std::vector<Edge> forward;             // E_F, (tail, head) ascending
  std::vector<Vertex> back_vertices;     // V_B: endpoints of back-edges, ascending
};

/// Requires every edge tail to be reachable from s (prune the graph first).
EdgeClassification classify_edges(const WeightedDigraph& g, const DistanceTable& d);

struct PathCheck {
  bool simple = false;
  Weight weight = 0;
  bool uses_back_edge = false;
};

/// Throws InvalidPath on the first consecutive pair not joined by an edge.
/// Edges whose tail is unreachable from s are never counted as back-edges.
PathCheck validate_path(const WeightedDigraph& g, const DistanceTable& d, const PathSeq& p);
PathCheck validate_path(const WeightedDigraph& g, const PathSeq& p);

/// True for a simple s->t path strictly heavier than d(s,t).
bool is_not_shortest_path(const WeightedDigraph& g, const DistanceTable& d, const PathSeq& p);

/// Every vertex lies on a shortest s->t path.
bool is_straight(const WeightedDigraph& g, const DistanceTable& d);

/// Straight, no edge joins two equal-distance vertices, and no edge (u,v) with
/// d(s,u) < d(s,v) spans a distance value strictly inside (d(s,u), d(s,u)+w).
bool is_layered(const WeightedDigraph& g, const DistanceTable& d);

/// Sorted distinct finite values of d(s, .) over the graph's vertices.
std::vector<Weight> distinct_distances(const WeightedDigraph& g, const DistanceTable& d);

/// The layer function of a layered graph: layer(v) = i when d(s,v) is the
/// i-th smallest distinct distance (1-based).
class LayerAssignment {
 public:
  LayerAssignment() = default;
  LayerAssignment(const WeightedDigraph& g, const DistanceTable& d);

  int operator()(Vertex v) const { return layer_[static_cast<std::size_t>(v)]; }
  int layer_count() const noexcept { return static_cast<int>(members_.size()); }
  const std::vector<Vertex>& members(int layer) const { return members_[static_cast<std::size_t>(layer - 1)]; }
  /// Forward edges whose tail sits in `layer`, (tail, head) ascending.
  const std::vector<Edge>& forward_edges(int layer) const {
    return forward_[static_cast<std::size_t>(layer - 1)];
  }
  Weight value(int layer) const { return values_[static_cast<std::size_t>(layer - 1)]; }

 private:
  std::vector<int> layer_;  // 0 for ids not in the graph
  std::vector<Weight> values_;
  std::vector<std::vector<Vertex>> members_;
  std::vector<std::vector<Edge>> forward_;
};

/// Throws ContractViolation unless g is layered.
LayerAssignment layer_function(const WeightedDigraph& g, const DistanceTable& d);

}  // namespace nsp
