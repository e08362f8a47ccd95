#include <set>
#include <sstream>

#include "doctest.h"
#include "nextsp/errors.hpp"
#include "nextsp/generators.hpp"
#include "nextsp/reduction.hpp"
#include "support.hpp"

using namespace nsp;

namespace {

// Recount of layer-violating edges straight from the definition.
std::size_t count_violations(const WeightedDigraph& g) {
  const auto ref = testing::all_pairs(g);
  const Vertex s = g.source();
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    const Weight du = *ref[s][e.tail];
    const Weight dv = *ref[s][e.head];
    if (du == dv) {
      ++count;
      continue;
    }
    if (du > dv) continue;
    for (Vertex x : g.vertices()) {
      if (*ref[s][x] > du && *ref[s][x] < du + e.weight) {
        ++count;
        break;
      }
    }
  }
  return count;
}

std::size_t distinct_count(const WeightedDigraph& g) {
  const auto ref = testing::all_pairs(g);
  std::set<Weight> values;
  for (Vertex v : g.vertices()) values.insert(*ref[g.source()][v]);
  return values.size();
}

// The vertex straighten would pick next: finite distances, off every shortest path.
std::optional<Vertex> eliminable(const WeightedDigraph& g) {
  const auto ref = testing::all_pairs(g);
  const Vertex s = g.source(), t = g.sink();
  if (!ref[s][t]) return std::nullopt;
  for (Vertex u : g.vertices()) {
    if (u == s || u == t || !ref[s][u] || !ref[u][t]) continue;
    if (*ref[s][u] + *ref[u][t] > *ref[s][t]) return u;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("eliminating u keeps the cheaper direct edge") {
  const auto g = testing::graph("3 3 0 2\n0 1 2\n1 2 2\n0 2 1\n");
  const auto [h, rec] = eliminate_vertex(g, 1);
  CHECK(h.edge_count() == 1);
  CHECK(h.weight(0, 2) == 1);
  CHECK(rec.shortcut_edges.empty());
  CHECK_FALSE(rec.is_shortcut(0, 2));
}

TEST_CASE("eliminating u adds a shortcut edge") {
  // s=0 u=1 a=2 t=3
  const auto g = testing::graph("4 4 0 3\n0 1 2\n1 3 2\n0 2 1\n2 3 1\n");
  const auto [h, rec] = eliminate_vertex(g, 1);
  CHECK(h.weight(0, 3) == 4);
  CHECK(rec.is_shortcut(0, 3));
  CHECK(rec.shortcut_edges == std::vector<VertexPair>{{0, 3}});

  CHECK(lift_pi_prime(rec, {0, 3}) == PathSeq{0, 1, 3});
  CHECK(lift_pi_prime(rec, {0, 2, 3}) == PathSeq{0, 2, 3});
  CHECK_THROWS_AS(eliminate_vertex(g, 2), ContractViolation);
}

TEST_CASE("elimination preserves distances among the survivors") {
  int steps = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto g = gen_random(7, 0.35, 6, seed);
    const auto u = eliminable(g);
    if (!u) continue;
    const auto before = testing::all_pairs(g);
    const auto [h, rec] = eliminate_vertex(g, *u);
    const auto after = testing::all_pairs(h);
    for (Vertex x : h.vertices())
      for (Vertex y : h.vertices()) CHECK(before[x][y] == after[x][y]);
    ++steps;
  }
  CHECK(steps > 10);
}

TEST_CASE("lifting through two shortcut edges") {
  bool found = false;
  for (std::uint64_t seed = 0; seed < 2000 && !found; ++seed) {
    const auto g = gen_random(7, 0.45, 6, seed);
    const auto u = eliminable(g);
    if (!u) continue;
    const auto [h, rec] = eliminate_vertex(g, *u);
    for (const auto& p : testing::simple_paths(h, h.source(), h.sink())) {
      int shortcuts = 0;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) shortcuts += rec.is_shortcut(p[i], p[i + 1]);
      if (shortcuts < 2) continue;
      const auto lifted = lift_pi_prime(rec, p);
      CHECK(testing::is_simple(lifted));
      CHECK(lifted.front() == g.source());
      CHECK(lifted.back() == g.sink());
      CHECK(testing::path_weight(g, lifted) <= testing::path_weight(h, p));
      found = true;
      break;
    }
  }
  CHECK(found);
}

TEST_CASE("straighten on a straight graph is the identity") {
  const auto g = testing::graph("4 4 0 3\n0 1 1\n1 3 1\n0 2 1\n2 3 1\n");
  const auto r = straighten(g);
  CHECK(r.graph == g);
  CHECK(r.trace.steps.empty());
  CHECK(r.trace.candidates.empty());
}

TEST_CASE("straighten records the path lost to elimination") {
  const auto g = testing::graph("3 3 0 2\n0 1 2\n1 2 2\n0 2 1\n");
  const auto r = straighten(g);
  CHECK(r.graph.vertex_count() == 2);
  CHECK(r.graph.edges() == std::vector<Edge>{{0, 2, 1}});
  REQUIRE(r.trace.candidates.size() == 1);
  CHECK(r.trace.candidates[0].lifted == PathSeq{0, 1, 2});
  CHECK(r.trace.candidates[0].generated_weight == 4);
}

TEST_CASE("layerize subdivides a layer-skipping edge") {
  // s=0 b=1 a=2 t=3
  const auto g = testing::graph("4 4 0 3\n0 1 1\n1 2 1\n0 2 2\n2 3 1\n");
  CHECK(potential_phi(g, shortest_distances(g)) == 1);
  CHECK(count_violations(g) == 1);
  const auto r = layerize(g);
  REQUIRE(r.trace.steps.size() == 1);
  const auto* sub = std::get_if<SubdivisionRecord>(&r.trace.steps[0]);
  REQUIRE(sub);
  CHECK(sub->original == Edge{0, 2, 2});
  CHECK(sub->chain == std::vector<Vertex>{4});
  CHECK(r.graph.weight(0, 4) == 1);
  CHECK(r.graph.weight(4, 2) == 1);
  CHECK_FALSE(r.graph.has_edge(0, 2));
  CHECK(lift_layered_path(r.trace, {0, 4, 2, 3}) == PathSeq{0, 2, 3});
  CHECK(lift_layered_path(r.trace, {0, 1, 2, 3}) == PathSeq{0, 1, 2, 3});
}

TEST_CASE("layerize on a layered graph is the identity") {
  const auto g = testing::graph("6 7 0 5\n0 1 1\n1 2 1\n2 5 1\n0 3 1\n3 4 1\n4 5 1\n4 1 1\n");
  CHECK(potential_phi(g, shortest_distances(g)) == 0);
  const auto r = layerize(g);
  CHECK(r.graph == g);
  CHECK(r.trace.steps.empty());
}

TEST_CASE("phi drops by one per layerize step and distances survive") {
  int iterations = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = gen_random(7, 0.45, 5, seed);
    if (!shortest_distances(g).source_to_sink()) continue;
    const auto straight = straighten(g);
    const auto full = layerize(straight);
    WeightedDigraph cur = straight.graph;
    const auto d0 = testing::all_pairs(cur);
    const std::size_t distinct = distinct_count(cur);
    std::size_t phi = count_violations(cur);
    CHECK(phi == potential_phi(cur, shortest_distances(cur)));
    for (std::size_t i = straight.trace.steps.size(); i < full.trace.steps.size(); ++i) {
      apply_step(cur, full.trace.steps[i]);
      const std::size_t next = count_violations(cur);
      CHECK(next + 1 == phi);
      phi = next;
      const auto d = testing::all_pairs(cur);
      for (Vertex v : straight.graph.vertices()) CHECK(d[cur.source()][v] == d0[cur.source()][v]);
      CHECK(distinct_count(cur) == distinct);
      ++iterations;
    }
    CHECK(phi == 0);
    CHECK(cur == full.graph);
    CHECK(replay(g, full.trace) == full.graph);
  }
  CHECK(iterations > 20);
}

TEST_CASE("lifted layered paths are valid and never heavier") {
  int lifted_count = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = gen_random(6, 0.45, 5, seed);
    if (!shortest_distances(g).source_to_sink()) continue;
    const auto r = layerize(straighten(g));
    for (const auto& p : testing::simple_paths(r.graph, r.graph.source(), r.graph.sink())) {
      const auto lifted = lift_through(r.trace, r.trace.steps.size(), p);
      CHECK(testing::is_simple(lifted.path));
      CHECK(lifted.path.front() == g.source());
      CHECK(lifted.path.back() == g.sink());
      const Weight w = testing::path_weight(g, lifted.path);
      const Weight layered_w = testing::path_weight(r.graph, p);
      CHECK(w <= layered_w);
      if (!lifted.crossed_shortcut) CHECK(w == layered_w);
      ++lifted_count;
    }
  }
  CHECK(lifted_count > 50);
}

TEST_CASE("trace dump names every step") {
  const auto g = testing::graph("4 4 0 3\n0 1 1\n1 2 1\n0 2 2\n2 3 1\n");
  std::ostringstream out;
  dump_trace(out, layerize(g).trace);
  CHECK(out.str().find("step 0") != std::string::npos);
}
