#include "doctest.h"

#include <sstream>

#include "plsearch/edge_list.hpp"
#include "plsearch/generators.hpp"

using namespace plsearch;

namespace {

EdgeListData parse(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

}  // namespace

TEST_CASE("path from two lines") {
  const EdgeListData d = parse("0 1\n1 2\n");
  CHECK(d.graph.node_count() == 3);
  CHECK(d.graph.edge_count() == 2);
  CHECK(d.graph.degree(1) == 2);
}

TEST_CASE("self-loop is dropped and reported") {
  const EdgeListData d = parse("0 0\n0 1\n");
  CHECK(d.graph.edge_count() == 1);
  CHECK(d.dropped.self_loops == 1);
}

TEST_CASE("comments and blank lines are skipped, ids compacted") {
  const EdgeListData d = parse("# comment\n\n3 4\n");
  CHECK(d.graph.node_count() == 2);
  CHECK(d.graph.has_edge(0, 1));
  CHECK(d.original_ids == std::vector<std::uint64_t>{3, 4});
}

TEST_CASE("compaction follows first appearance") {
  const EdgeListData d = parse("9 2\n2 40\n40 9\n7 2\n");
  CHECK(d.original_ids == std::vector<std::uint64_t>{9, 2, 40, 7});
  CHECK(d.graph.has_edge(0, 1));
  CHECK(d.graph.has_edge(3, 1));
}

TEST_CASE("duplicate edges are counted") {
  const EdgeListData d = parse("0 1\n1 0\n0 1\n1 2\n");
  CHECK(d.graph.edge_count() == 2);
  CHECK(d.dropped.duplicates == 2);
}

TEST_CASE("parse errors carry the line number") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse(text);
    } catch (const EdgeListParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("0 1\n2\n") == 2);
  CHECK(line_of("0 1\n# x\n1 -2\n") == 3);
  CHECK(line_of("a b\n") == 1);
  CHECK(line_of("0 1 2\n") == 1);
  CHECK_THROWS_WITH_AS(parse("1 2\n3 x\n"), doctest::Contains("line 2"), EdgeListParseError);
}

TEST_CASE("writer emits sorted u < v lines") {
  const std::vector<Edge> edges{{2, 0}, {1, 0}, {2, 1}};
  std::ostringstream out;
  write_edge_list(Graph::from_edges(3, edges), out);
  CHECK(out.str() == "0 1\n0 2\n1 2\n");
}

TEST_CASE("round trip is isomorphic through the id map") {
  for (int s = 0; s < 5; ++s) {
    const Graph g = largest_connected_component(generate_power_law_graph(800, 2.2, derive_seed(3, "rt", s))).graph;
    std::stringstream buf;
    write_edge_list(g, buf);
    const EdgeListData d = read_edge_list(buf);
    REQUIRE(d.graph.node_count() == g.node_count());
    CHECK(d.graph.edge_count() == g.edge_count());
    for (const Edge& e : d.graph.edges()) {
      CHECK(g.has_edge(static_cast<NodeId>(d.original_ids[e.u]), static_cast<NodeId>(d.original_ids[e.v])));
    }
  }
}
