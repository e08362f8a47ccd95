#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nextsp/graph.hpp"

namespace nsp {

/// Exact distance, or std::nullopt for "unreachable". Never a large finite stand-in.
using Distance = std::optional<Weight>;

struct DistanceTable {
  std::vector<Distance> from_source;  // d(s, v), indexed by vertex id
  std::vector<Distance> to_sink;      // d(v, t)
  Vertex source = 0;
  Vertex sink = 0;

  Distance from_s(Vertex v) const { return from_source[static_cast<std::size_t>(v)]; }
  Distance to_t(Vertex v) const { return to_sink[static_cast<std::size_t>(v)]; }
  Distance source_to_sink() const { return from_s(sink); }
};

enum class Direction { Forward, Reverse };

/// Single-source distances from `origin` (Forward) or single-sink distances
/// to `origin` (Reverse). Vertices flagged in `blocked` are never entered.
std::vector<Distance> dijkstra(const WeightedDigraph& g, Vertex origin,
                               Direction dir = Direction::Forward,
                               std::span<const char> blocked = {});

DistanceTable shortest_distances(const WeightedDigraph& g);

/// Dijkstra tree rooted at `origin`. For Forward trees parent[v] is v's
/// predecessor on a shortest origin->v path; for Reverse trees it is v's
/// successor on a shortest v->origin path.
struct ShortestPathTree {
  Vertex origin = 0;
  Direction dir = Direction::Forward;
  std::vector<Distance> dist;
  std::vector<Vertex> parent;

  /// origin->v (Forward) or v->origin (Reverse); empty when unreachable.
  PathSeq path(Vertex v) const;
};

ShortestPathTree shortest_path_tree(const WeightedDigraph& g, Vertex origin,
                                    Direction dir = Direction::Forward);

/// A shortest from->to path avoiding `blocked` vertices (from/to themselves
/// must not be blocked), or nullopt when to is unreachable.
std::optional<PathSeq> shortest_path(const WeightedDigraph& g, Vertex from, Vertex to,
                                     std::span<const char> blocked = {});

}  // namespace nsp
