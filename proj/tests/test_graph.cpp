#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "drsub/graph.hpp"

using namespace drsub;

TEST_CASE("edgelist parsing") {
  Graph g = parse_graph(std::string(DRSUB_TEST_DATA_DIR) + "/fig2.edgelist", GraphFormat::Edgelist);
  CHECK(g.n == 10);
  CHECK(g.edge_count() == 12);
  auto deg = g.degrees();
  CHECK(deg[2] == 3);  // vertex 3
  CHECK(deg[0] == 2);  // vertex 1

  std::istringstream dup("1 2\n2 1\n1 2\n# comment\n2 3\n");
  Graph d = parse_graph_stream(dup, GraphFormat::Edgelist, "<dup>");
  CHECK(d.edge_count() == 2);

  std::istringstream selfloop("1 1\n");
  CHECK_THROWS_WITH_AS(parse_graph_stream(selfloop, GraphFormat::Edgelist, "<bad>"),
                       doctest::Contains("self-loop"), std::runtime_error);

  std::istringstream half("1\n");
  CHECK_THROWS_AS(parse_graph_stream(half, GraphFormat::Edgelist, "<bad>"), std::runtime_error);
}

TEST_CASE("dimacs parsing") {
  std::istringstream k3("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  Graph g = parse_graph_stream(k3, GraphFormat::Dimacs, "<k3>");
  CHECK(g.n == 3);
  CHECK(g.edge_count() == 3);

  std::istringstream selfloop("p edge 2 1\ne 1 1\n");
  CHECK_THROWS_AS(parse_graph_stream(selfloop, GraphFormat::Dimacs, "<bad>"), std::runtime_error);

  std::istringstream miscount("p edge 3 5\ne 1 2\ne 2 3\n");
  CHECK_THROWS_WITH_AS(parse_graph_stream(miscount, GraphFormat::Dimacs, "<bad>"),
                       doctest::Contains("declares"), std::runtime_error);

  std::istringstream out_of_range("p edge 2 1\ne 1 5\n");
  CHECK_THROWS_AS(parse_graph_stream(out_of_range, GraphFormat::Dimacs, "<bad>"),
                  std::runtime_error);

  std::istringstream missing_header("e 1 2\n");
  CHECK_THROWS_AS(parse_graph_stream(missing_header, GraphFormat::Dimacs, "<bad>"),
                  std::runtime_error);
}

TEST_CASE("components and induced subgraphs") {
  Graph g = Graph::from_edges(6, {{1, 2}, {2, 3}, {4, 5}});
  auto comps = g.components();
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{1, 2, 3});
  CHECK(comps[1] == std::vector<int>{4, 5});
  CHECK(comps[2] == std::vector<int>{6});

  Graph sub = g.induced(comps[0]);
  CHECK(sub.n == 3);
  CHECK(sub.edge_count() == 2);

  SymMatrix a = g.adjacency();
  CHECK(a(0, 1) == 1.0);
  CHECK(a(0, 3) == 0.0);
  CHECK(a(3, 4) == 1.0);
}
