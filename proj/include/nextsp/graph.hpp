#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "nextsp/errors.hpp"
#include "nextsp/types.hpp"

namespace nsp {

/// Simple directed graph with strictly positive exact weights and a
/// distinguished source and sink.
///
/// Vertex ids are stable: removing a vertex leaves a hole in the id space and
/// new vertices are always allocated past the largest id ever used. Adjacency
/// is kept ordered by neighbour id so every traversal is deterministic.
class WeightedDigraph {
 public:
  using Adjacency = std::map<Vertex, Weight>;

  WeightedDigraph() = default;
  WeightedDigraph(Vertex vertex_count, Vertex source, Vertex sink);

  Vertex source() const noexcept { return source_; }
  Vertex sink() const noexcept { return sink_; }

  /// One past the largest vertex id ever allocated.
  Vertex id_bound() const noexcept { return static_cast<Vertex>(alive_.size()); }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool contains(Vertex v) const noexcept {
    return v >= 0 && v < id_bound() && alive_[static_cast<std::size_t>(v)];
  }
  std::vector<Vertex> vertices() const;

  const Adjacency& out_edges(Vertex v) const;
  const Adjacency& in_edges(Vertex v) const;
  std::optional<Weight> weight(Vertex tail, Vertex head) const;
  bool has_edge(Vertex tail, Vertex head) const { return weight(tail, head).has_value(); }

  /// All edges ordered by (tail, head).
  std::vector<Edge> edges() const;

  void add_edge(Vertex tail, Vertex head, Weight w);
  void set_weight(Vertex tail, Vertex head, Weight w);
  void remove_edge(Vertex tail, Vertex head);
  void remove_vertex(Vertex v);
  Vertex add_vertex();

  /// Number of fractional decimal digits folded into every weight.
  int decimals() const noexcept { return decimals_; }
  void set_decimals(int decimals);

  friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;

 private:
  void require_vertex(Vertex v) const;

  Vertex source_ = 0;
  Vertex sink_ = 0;
  std::vector<bool> alive_;
  std::vector<Adjacency> out_;
  std::vector<Adjacency> in_;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
  int decimals_ = 0;
};

}  // namespace nsp
