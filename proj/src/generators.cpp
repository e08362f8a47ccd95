#include "nextsp/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace nsp {

namespace {

// std::uniform_int_distribution is implementation-defined; keep output stable
// across standard libraries by drawing from the raw engine.
Weight uniform(std::mt19937_64& rng, Weight lo, Weight hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<Weight>(rng() % span);
}

bool coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace

WeightedDigraph gen_random(Vertex n, double p, Weight w_max, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_random needs n >= 2");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must lie in [0, 1]");
  if (w_max < 1) throw std::invalid_argument("w_max must be positive");
  std::mt19937_64 rng(seed);
  WeightedDigraph g(n, 0, n - 1);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      const bool take = coin(rng, p);
      const Weight w = uniform(rng, 1, w_max);
      if (take) g.add_edge(u, v, w);
    }
  }
  return g;
}

WeightedDigraph gen_layered(int layers, int width, int back_edges, std::uint64_t seed, Weight w_max) {
  if (layers < 2) throw std::invalid_argument("gen_layered needs at least two layers");
  if (width < 1) throw std::invalid_argument("gen_layered needs width >= 1");
  if (back_edges < 0 || w_max < 1) throw std::invalid_argument("invalid back-edge parameters");
  std::mt19937_64 rng(seed);

  std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(layers));
  const Vertex n = 2 + static_cast<Vertex>(layers - 2) * width;
  Vertex next = 1;
  members.front() = {0};
  for (int l = 1; l + 1 < layers; ++l) {
    for (int i = 0; i < width; ++i) members[static_cast<std::size_t>(l)].push_back(next++);
  }
  members.back() = {n - 1};
  WeightedDigraph g(n, 0, n - 1);

  for (std::size_t l = 0; l + 1 < members.size(); ++l) {
    const auto& lo = members[l];
    const auto& hi = members[l + 1];
    for (Vertex u : lo) {
      for (Vertex v : hi) {
        if (coin(rng, 0.5)) g.add_edge(u, v, 1);
      }
    }
    for (Vertex u : lo) {
      if (g.out_edges(u).empty()) g.add_edge(u, hi[static_cast<std::size_t>(uniform(rng, 0, static_cast<Weight>(hi.size()) - 1))], 1);
    }
    for (Vertex v : hi) {
      if (g.in_edges(v).empty()) g.add_edge(lo[static_cast<std::size_t>(uniform(rng, 0, static_cast<Weight>(lo.size()) - 1))], v, 1);
    }
  }

  std::vector<std::pair<Vertex, Vertex>> slots;
  for (std::size_t hi = 1; hi < members.size(); ++hi) {
    for (std::size_t lo = 0; lo < hi; ++lo) {
      for (Vertex u : members[hi]) {
        for (Vertex v : members[lo]) slots.emplace_back(u, v);
      }
    }
  }
  if (static_cast<std::size_t>(back_edges) > slots.size()) {
    throw std::invalid_argument("more back-edges requested than vertex pairs available");
  }
  for (int k = 0; k < back_edges; ++k) {
    const auto pick = static_cast<std::size_t>(uniform(rng, k, static_cast<Weight>(slots.size()) - 1));
    std::swap(slots[static_cast<std::size_t>(k)], slots[pick]);
    const auto [u, v] = slots[static_cast<std::size_t>(k)];
    g.add_edge(u, v, uniform(rng, 1, w_max));
  }
  return g;
}

WeightedDigraph gen_dag(Vertex n, double p, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_dag needs n >= 2");
  std::mt19937_64 rng(seed);
  WeightedDigraph g(n, 0, n - 1);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng, p)) g.add_edge(u, v, 1);
    }
  }
  return g;
}

}  // namespace nsp
