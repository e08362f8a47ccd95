#pragma once

// Reference computations shared by the tests. Deliberately naive and
// independent of the library's algorithms.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nextsp/graph.hpp"
#include "nextsp/io.hpp"

namespace testing {

using nsp::Vertex;
using nsp::Weight;
using nsp::WeightedDigraph;
using Matrix = std::vector<std::vector<std::optional<Weight>>>;

inline WeightedDigraph graph(const std::string& text) { return nsp::parse_graph(std::string_view(text)); }

// Floyd–Warshall over all id slots; dead ids stay unreachable.
inline Matrix all_pairs(const WeightedDigraph& g) {
  const auto n = static_cast<std::size_t>(g.id_bound());
  Matrix d(n, std::vector<std::optional<Weight>>(n));
  for (Vertex v : g.vertices()) d[v][v] = 0;
  for (const auto& e : g.edges()) {
    if (!d[e.tail][e.head] || e.weight < *d[e.tail][e.head]) d[e.tail][e.head] = e.weight;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] && d[k][j] && (!d[i][j] || *d[i][k] + *d[k][j] < *d[i][j])) d[i][j] = *d[i][k] + *d[k][j];
  return d;
}

// Every simple from->to path, by plain recursion without a budget.
inline std::vector<std::vector<Vertex>> simple_paths(const WeightedDigraph& g, Vertex from, Vertex to) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur{from};
  std::vector<char> on(static_cast<std::size_t>(g.id_bound()), 0);
  on[from] = 1;
  std::function<void(Vertex)> go = [&](Vertex u) {
    if (u == to) {
      out.push_back(cur);
      return;
    }
    for (const auto& [v, w] : g.out_edges(u)) {
      if (on[v]) continue;
      on[v] = 1;
      cur.push_back(v);
      go(v);
      cur.pop_back();
      on[v] = 0;
    }
  };
  go(from);
  return out;
}

inline Weight path_weight(const WeightedDigraph& g, const std::vector<Vertex>& p) {
  Weight w = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) w += g.weight(p[i], p[i + 1]).value();
  return w;
}

inline bool is_simple(const std::vector<Vertex>& p) {
  return std::set<Vertex>(p.begin(), p.end()).size() == p.size();
}

// Weight of the next-to-shortest path by full enumeration, or nullopt.
inline std::optional<Weight> brute_next_weight(const WeightedDigraph& g) {
  const auto paths = simple_paths(g, g.source(), g.sink());
  if (paths.empty()) return std::nullopt;
  Weight best = path_weight(g, paths[0]);
  for (const auto& p : paths) best = std::min(best, path_weight(g, p));
  std::optional<Weight> next;
  for (const auto& p : paths) {
    const Weight w = path_weight(g, p);
    if (w > best && (!next || w < *next)) next = w;
  }
  return next;
}

}  // namespace testing
