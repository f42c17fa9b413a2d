#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "drsub/numeric.hpp"

namespace drsub {

// Undirected simple graph with 1-based vertex ids. Edges are normalized to
// (u < v), sorted and deduplicated; self-loops are rejected.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  static Graph from_edges(int n, std::vector<std::pair<int, int>> raw);

  int edge_count() const { return static_cast<int>(edges.size()); }
  SymMatrix adjacency() const;
  std::vector<int> degrees() const;
  // Connected components as sorted 1-based vertex id lists, ordered by
  // smallest member.
  std::vector<std::vector<int>> components() const;
  // Induced subgraph on the given (sorted, 1-based) vertices, relabeled 1..k.
  Graph induced(const std::vector<int>& vertices) const;
};

enum class GraphFormat { Edgelist, Dimacs };

// Edgelist: one "u v" pair per line, '#' starts a comment, n = max id seen.
// DIMACS: "c" comments, one "p edge n m" header, then m lines "e u v".
Graph parse_graph(const std::string& path, GraphFormat fmt);
Graph parse_graph_stream(std::istream& in, GraphFormat fmt, const std::string& source_name);

}  // namespace drsub
