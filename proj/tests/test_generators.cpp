#include <stdexcept>

#include "doctest.h"
#include "nextsp/generators.hpp"
#include "nextsp/oracle.hpp"
#include "nextsp/solver.hpp"
#include "support.hpp"

using namespace nsp;

TEST_CASE("full density on two vertices") {
  for (std::uint64_t seed : {0u, 5u, 99u}) {
    const auto g = gen_random(2, 1.0, 1, seed);
    CHECK(g.edges() == std::vector<Edge>{{0, 1, 1}, {1, 0, 1}});
  }
}

TEST_CASE("zero density is edgeless and has no answer") {
  const auto g = gen_random(5, 0.0, 5, 3);
  CHECK(g.edge_count() == 0);
  CHECK_FALSE(solve(g).found());
}

TEST_CASE("same seed, same bytes") {
  CHECK(serialize_graph(gen_random(8, 0.4, 5, 17)) == serialize_graph(gen_random(8, 0.4, 5, 17)));
  CHECK(serialize_graph(gen_layered(5, 3, 4, 17)) == serialize_graph(gen_layered(5, 3, 4, 17)));
  CHECK(serialize_graph(gen_dag(8, 0.4, 17)) == serialize_graph(gen_dag(8, 0.4, 17)));
  CHECK(serialize_graph(gen_random(8, 0.4, 5, 17)) != serialize_graph(gen_random(8, 0.4, 5, 18)));
}

TEST_CASE("three layers of width one form a path") {
  const auto g = gen_layered(3, 1, 0, 4);
  CHECK(g.edges() == std::vector<Edge>{{0, 1, 1}, {1, 2, 1}});
}

TEST_CASE("layered generator output is layered") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = gen_layered(3 + static_cast<int>(seed % 5), 1 + static_cast<int>(seed % 3),
                               static_cast<int>(seed % 6), seed);
    CHECK(is_layered(g, shortest_distances(g)));
  }
  CHECK_THROWS_AS(gen_layered(1, 2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_layered(3, 1, 100, 0), std::invalid_argument);
}

TEST_CASE("seed 11 layered instance: solver and oracle agree") {
  const auto g = gen_layered(4, 2, 1, 11);
  const auto got = solve(g);
  const auto want = oracle_next_sp(g);
  REQUIRE(got.found() == want.found());
  if (got.found()) CHECK(got.weight() == want.weight());
}

TEST_CASE("dag generator only points forward") {
  for (const auto& e : gen_dag(9, 0.5, 2).edges()) CHECK(e.tail < e.head);
}
