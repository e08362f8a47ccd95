#include "nextsp/distances.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace nsp {

namespace {

struct SearchResult {
  std::vector<Distance> dist;
  std::vector<Vertex> parent;
};

bool is_blocked(std::span<const char> blocked, Vertex v) {
  return !blocked.empty() && blocked[static_cast<std::size_t>(v)];
}

SearchResult search(const WeightedDigraph& g, Vertex origin, Direction dir,
                    std::span<const char> blocked, std::optional<Vertex> stop_at) {
  const auto n = static_cast<std::size_t>(g.id_bound());
  SearchResult r{std::vector<Distance>(n), std::vector<Vertex>(n, -1)};
  if (!g.contains(origin) || is_blocked(blocked, origin)) return r;

  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::vector<char> settled(n, 0);
  r.dist[static_cast<std::size_t>(origin)] = 0;
  heap.emplace(0, origin);
  while (!heap.empty()) {
    const auto [du, u] = heap.top();
    heap.pop();
    const auto ui = static_cast<std::size_t>(u);
    if (settled[ui]) continue;
    settled[ui] = 1;
    if (stop_at && *stop_at == u) break;
    const auto& adj = dir == Direction::Forward ? g.out_edges(u) : g.in_edges(u);
    for (const auto& [v, w] : adj) {
      const auto vi = static_cast<std::size_t>(v);
      if (settled[vi] || is_blocked(blocked, v)) continue;
      const Weight nd = du + w;
      if (!r.dist[vi] || nd < *r.dist[vi]) {
        r.dist[vi] = nd;
        r.parent[vi] = u;
        heap.emplace(nd, v);
      }
    }
  }
  return r;
}

}  // namespace

std::vector<Distance> dijkstra(const WeightedDigraph& g, Vertex origin, Direction dir,
                               std::span<const char> blocked) {
  return search(g, origin, dir, blocked, std::nullopt).dist;
}

ShortestPathTree shortest_path_tree(const WeightedDigraph& g, Vertex origin, Direction dir) {
  auto r = search(g, origin, dir, {}, std::nullopt);
  return {origin, dir, std::move(r.dist), std::move(r.parent)};
}

PathSeq ShortestPathTree::path(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= dist.size() || !dist[static_cast<std::size_t>(v)]) return {};
  PathSeq out;
  for (Vertex x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) out.push_back(x);
  if (dir == Direction::Forward) std::reverse(out.begin(), out.end());
  return out;
}

DistanceTable shortest_distances(const WeightedDigraph& g) {
  return {dijkstra(g, g.source(), Direction::Forward), dijkstra(g, g.sink(), Direction::Reverse),
          g.source(), g.sink()};
}

std::optional<PathSeq> shortest_path(const WeightedDigraph& g, Vertex from, Vertex to,
                                     std::span<const char> blocked) {
  if (!g.contains(to)) return std::nullopt;
  const auto r = search(g, from, Direction::Forward, blocked, to);
  if (!r.dist[static_cast<std::size_t>(to)]) return std::nullopt;
  PathSeq path;
  for (Vertex v = to; v != -1; v = r.parent[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace nsp
