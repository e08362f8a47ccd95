#include <sstream>

#include "doctest.h"
#include "nextsp/errors.hpp"
#include "nextsp/generators.hpp"
#include "support.hpp"

using namespace nsp;

TEST_CASE("parse the triangle") {
  const auto g = testing::graph("3 3 0 2\n0 1 1\n1 2 1\n0 2 1\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.source() == 0);
  CHECK(g.sink() == 2);
  CHECK(g.weight(0, 1) == 1);
  CHECK(g.weight(1, 2) == 1);
  CHECK(g.weight(0, 2) == 1);
  CHECK_FALSE(g.has_edge(2, 0));
}

TEST_CASE("comments and blank lines are skipped") {
  const auto g = testing::graph("# header next\n\n2 1 0 1\n# edge\n0 1 7\n\n");
  CHECK(g.weight(0, 1) == 7);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      testing::graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK_THROWS_AS(testing::graph("2 1 0 1\n0 1 0\n"), ParseError);
  CHECK(line_of("2 1 0 1\n0 1 0\n") == 2);
  CHECK(line_of("2 2 0 1\n0 1 1\n0 1 2\n") == 3);  // duplicate
  CHECK(line_of("2 1 0 1\n0 0 1\n") == 2);         // self-loop
  CHECK(line_of("2 1 0 1\n0 5 1\n") == 2);         // id out of range
  CHECK(line_of("2 1 0 1\n0 1 -3\n") == 2);
  CHECK(line_of("2 1 0 1\n0 1 abc\n") == 2);
  CHECK(line_of("2 1 0 1\n0 1 0.0000000001\n") == 2);
  CHECK(line_of("2 1 0 0\n") == 1);
  CHECK(line_of("3 2 0 2\n0 1 1\n") > 0);          // fewer edges than declared
  CHECK(line_of("2 1 0 1\n0 1 9223372036854775807\n") == 2);
  CHECK_THROWS_AS(testing::graph(""), ParseError);
}

TEST_CASE("decimal weights share one scale") {
  const auto g = testing::graph("3 3 0 2\n0 1 1.5\n1 2 2\n0 2 0.25\n");
  CHECK(g.decimals() == 2);
  CHECK(g.weight(0, 1) == 150);
  CHECK(g.weight(1, 2) == 200);
  CHECK(g.weight(0, 2) == 25);
  CHECK(format_weight(375, 2) == "3.75");
  CHECK(format_weight(5, 2) == "0.05");
  CHECK(format_weight(12, 0) == "12");
}

TEST_CASE("serialization round-trips") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g = gen_random(6, 0.4, 9, seed);
    g.set_decimals(static_cast<int>(seed % 4));
    const auto text = serialize_graph(g);
    CHECK(parse_graph(std::string_view(text)) == g);
  }
}

TEST_CASE("graph mutations keep the invariants") {
  WeightedDigraph g(3, 0, 2);
  g.add_edge(0, 1, 2);
  CHECK_THROWS_AS(g.add_edge(0, 1, 3), GraphError);
  CHECK_THROWS_AS(g.add_edge(1, 1, 3), GraphError);
  CHECK_THROWS_AS(g.add_edge(1, 2, 0), GraphError);
  CHECK_THROWS_AS(g.remove_vertex(0), GraphError);
  g.add_edge(1, 2, 1);
  g.remove_vertex(1);
  CHECK_FALSE(g.contains(1));
  CHECK(g.edge_count() == 0);
  CHECK(g.add_vertex() == 3);
  CHECK_THROWS(WeightedDigraph(2, 0, 0));
}

TEST_CASE("path file") {
  std::istringstream in("# comment\n0 3 1 2\n");
  CHECK(parse_path(in) == PathSeq{0, 3, 1, 2});
}
