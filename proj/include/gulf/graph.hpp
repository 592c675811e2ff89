#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gulf/bitset.hpp"

namespace gulf {

class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge &) const = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Simple undirected graph on vertices 0..n-1. Immutable once built; edges are
// kept sorted so that edge ids are stable and equality is structural. Labels
// are carried alongside but ignored by ==.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : Graph(n, {}) {}
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge> &edges() const { return edges_; }
  const Edge &edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
  const Bitset &adjacency(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  const std::vector<int> &neighbors(int v) const { return nbrs_[static_cast<std::size_t>(v)]; }
  // Edge ids parallel to neighbors(v).
  const std::vector<int> &incident(int v) const { return inc_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(nbrs_[static_cast<std::size_t>(v)].size()); }
  int max_degree() const;
  // -1 when u,v are not adjacent.
  int edge_id(int u, int v) const;

  const std::map<int, std::string> &labels() const { return labels_; }
  std::optional<std::string> label(int v) const;
  void set_label(int v, std::string text);

  // Summand boundaries recorded by disjoint_union: summand k occupies
  // vertices [parts()[k], parts()[k+1]). Empty unless built by disjoint_union.
  const std::vector<int> &parts() const { return parts_; }
  void set_parts(std::vector<int> p) { parts_ = std::move(p); }

  bool operator==(const Graph &o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Bitset> adj_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<std::vector<int>> inc_;
  std::map<int, std::string> labels_;
  std::vector<int> parts_;
};

// Collects edges with validation deferred to build(); add() rejects loops,
// out-of-range endpoints and duplicates immediately.
class GraphBuilder {
public:
  explicit GraphBuilder(int n = 0) : n_(n) {}
  int add_vertex(std::string label = {});
  int n() const { return n_; }
  void add_edge(int u, int v);
  // Adds the edge unless already present.
  void ensure_edge(int u, int v);
  bool has_edge(int u, int v) const;
  void label(int v, std::string text);
  Graph build() const;

private:
  int n_;
  std::vector<Edge> edges_;
  std::map<Edge, bool> seen_;
  std::map<int, std::string> labels_;
};

class DiGraph {
public:
  DiGraph() = default;
  DiGraph(int n, std::vector<std::pair<int, int>> arcs);
  int n() const { return n_; }
  const std::vector<std::pair<int, int>> &arcs() const { return arcs_; }

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> arcs_;
};

Graph disjoint_union(const std::vector<Graph> &gs);
Graph induced_subgraph(const Graph &g, const std::vector<int> &vertices);
// Subgraph formed by a set of edge ids; keeps all n vertices.
Graph edge_subgraph(const Graph &g, const std::vector<int> &edge_ids);
// Drops isolated vertices; `kept` (if given) receives the old index of each new vertex.
Graph without_isolated(const Graph &g, std::vector<int> *kept = nullptr);

// Component id per vertex, numbered in order of smallest vertex.
std::vector<int> component_ids(const Graph &g, int *count = nullptr);
// Vertex lists of components, each sorted ascending.
std::vector<std::vector<int>> components(const Graph &g);
std::vector<Graph> component_graphs(const Graph &g);
bool is_connected(const Graph &g);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph empty_graph(int n);
// k vertex-disjoint copies of g.
Graph copies(const Graph &g, int k);

} // namespace gulf
