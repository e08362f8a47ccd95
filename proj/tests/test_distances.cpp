#include "doctest.h"
#include "nextsp/distances.hpp"
#include "nextsp/generators.hpp"
#include "support.hpp"

using namespace nsp;

TEST_CASE("triangle distances") {
  const auto g = testing::graph("3 3 0 2\n0 1 1\n1 2 1\n0 2 1\n");
  const auto d = shortest_distances(g);
  CHECK(d.from_source == std::vector<Distance>{0, 1, 1});
  CHECK(d.to_sink == std::vector<Distance>{1, 1, 0});
}

TEST_CASE("vertices past the sink cannot reach it") {
  const auto g = testing::graph("3 2 0 1\n0 1 1\n1 2 4\n");
  const auto d = shortest_distances(g);
  CHECK(d.from_s(2) == 5);
  CHECK(d.to_t(2) == std::nullopt);
}

TEST_CASE("edge t->x leaves x unreachable from s") {
  // s=0, t=1, x=2 with the only edge into x leaving t... via t->x
  const auto g = testing::graph("3 1 0 1\n1 2 1\n");
  const auto d = shortest_distances(g);
  CHECK(d.from_s(2) == std::nullopt);
  CHECK(d.from_s(1) == std::nullopt);
}

TEST_CASE("dijkstra matches Floyd-Warshall on seeded graphs") {
  for (std::uint64_t seed = 42; seed < 42 + 60; ++seed) {
    const auto g = gen_random(5 + static_cast<Vertex>(seed % 5), 0.35, 7, seed);
    const auto ref = testing::all_pairs(g);
    for (Vertex v : g.vertices()) {
      const auto fwd = dijkstra(g, v);
      const auto rev = dijkstra(g, v, Direction::Reverse);
      for (Vertex u : g.vertices()) {
        CHECK(fwd[u] == ref[v][u]);
        CHECK(rev[u] == ref[u][v]);
      }
    }
  }
}

TEST_CASE("seed 42 distances equal path-enumeration minima") {
  const auto g = gen_random(5, 0.4, 5, 42);
  const auto d = shortest_distances(g);
  for (Vertex v : g.vertices()) {
    std::optional<Weight> best;
    for (const auto& p : testing::simple_paths(g, g.source(), v)) {
      const Weight w = testing::path_weight(g, p);
      if (!best || w < *best) best = w;
    }
    CHECK(d.from_s(v) == best);
  }
}

TEST_CASE("shortest paths respect blocked vertices") {
  // 0->1->3 (2) and 0->2->3 (4)
  const auto g = testing::graph("4 4 0 3\n0 1 1\n1 3 1\n0 2 2\n2 3 2\n");
  CHECK(shortest_path(g, 0, 3) == PathSeq{0, 1, 3});
  std::vector<char> blocked(4, 0);
  blocked[1] = 1;
  CHECK(shortest_path(g, 0, 3, blocked) == PathSeq{0, 2, 3});
  blocked[2] = 1;
  CHECK_FALSE(shortest_path(g, 0, 3, blocked).has_value());

  const auto tree = shortest_path_tree(g, 3, Direction::Reverse);
  CHECK(tree.path(2) == PathSeq{2, 3});
  CHECK(tree.path(0) == PathSeq{0, 1, 3});
}
