#include "drsub/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace drsub {

namespace {

[[noreturn]] void parse_error(const std::string& source, int line, const std::string& msg) {
  throw std::runtime_error(source + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> raw) {
  if (n <= 0) throw std::invalid_argument("Graph: vertex count must be positive");
  for (auto& e : raw) {
    if (e.first == e.second) {
      throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(e.first));
    }
    if (e.first < 1 || e.first > n || e.second < 1 || e.second > n) {
      throw std::invalid_argument("Graph: vertex id out of range [1," + std::to_string(n) + "]");
    }
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  Graph g;
  g.n = n;
  g.edges = std::move(raw);
  return g;
}

SymMatrix Graph::adjacency() const {
  SymMatrix a(n);
  for (const auto& [u, v] : edges) a.set(u - 1, v - 1, 1.0);
  return a;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    ++d[u - 1];
    ++d[v - 1];
  }
  return d;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> adj(static_cast<size_t>(n) + 1);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  std::vector<std::vector<int>> comps;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  std::vector<int> relabel(static_cast<size_t>(n) + 1, 0);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 1 || v > n) throw std::invalid_argument("induced: vertex id out of range");
    relabel[v] = static_cast<int>(i) + 1;
  }
  std::vector<std::pair<int, int>> sub;
  for (const auto& [u, v] : edges) {
    if (relabel[u] && relabel[v]) sub.emplace_back(relabel[u], relabel[v]);
  }
  return from_edges(static_cast<int>(vertices.size()), std::move(sub));
}

Graph parse_graph(const std::string& path, GraphFormat fmt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_graph_stream(in, fmt, path);
}

Graph parse_graph_stream(std::istream& in, GraphFormat fmt, const std::string& source_name) {
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int lineno = 0;

  if (fmt == GraphFormat::Edgelist) {
    int maxv = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      int u, v;
      if (!(ls >> u)) continue;  // blank / comment-only line
      if (!(ls >> v)) parse_error(source_name, lineno, "expected two vertex ids");
      std::string extra;
      if (ls >> extra) parse_error(source_name, lineno, "trailing tokens after edge");
      if (u < 1 || v < 1) parse_error(source_name, lineno, "vertex ids must be >= 1");
      if (u == v) parse_error(source_name, lineno, "self-loop");
      edges.emplace_back(u, v);
      maxv = std::max({maxv, u, v});
    }
    if (maxv == 0) parse_error(source_name, lineno, "no edges found");
    return Graph::from_edges(maxv, std::move(edges));
  }

  // DIMACS
  int n = 0, m = -1;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (have_header) parse_error(source_name, lineno, "duplicate problem line");
      if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col")) {
        parse_error(source_name, lineno, "malformed problem line (want 'p edge n m')");
      }
      if (n < 1 || m < 0) parse_error(source_name, lineno, "invalid counts in problem line");
      have_header = true;
      continue;
    }
    if (tag == "e") {
      if (!have_header) parse_error(source_name, lineno, "edge before problem line");
      int u, v;
      if (!(ls >> u >> v)) parse_error(source_name, lineno, "malformed edge line");
      if (u == v) parse_error(source_name, lineno, "self-loop");
      if (u < 1 || u > n || v < 1 || v > n) {
        parse_error(source_name, lineno, "vertex id outside [1," + std::to_string(n) + "]");
      }
      edges.emplace_back(u, v);
      continue;
    }
    parse_error(source_name, lineno, "unrecognized line tag '" + tag + "'");
  }
  if (!have_header) parse_error(source_name, lineno, "missing problem line");
  if (static_cast<int>(edges.size()) != m) {
    parse_error(source_name, lineno,
                "header declares " + std::to_string(m) + " edges, found " +
                    std::to_string(edges.size()));
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace drsub
