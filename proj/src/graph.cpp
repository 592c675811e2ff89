#include "gulf/graph.hpp"

#include <algorithm>
#include <numeric>

namespace gulf {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw GraphError("negative vertex count");
  for (auto &e : edges_) {
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i] == edges_[i - 1])
      throw GraphError("duplicate edge " + std::to_string(edges_[i].u) + " " + std::to_string(edges_[i].v));
  const auto un = static_cast<std::size_t>(n);
  adj_.assign(un, Bitset(un));
  nbrs_.assign(un, {});
  inc_.assign(un, {});
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const auto [u, v] = edges_[id];
    adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    nbrs_[static_cast<std::size_t>(u)].push_back(v);
    nbrs_[static_cast<std::size_t>(v)].push_back(u);
    inc_[static_cast<std::size_t>(u)].push_back(static_cast<int>(id));
    inc_[static_cast<std::size_t>(v)].push_back(static_cast<int>(id));
  }
  for (std::size_t v = 0; v < un; ++v) {
    auto &nb = nbrs_[v];
    auto &ic = inc_[v];
    std::vector<std::size_t> order(nb.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return nb[a] < nb[b]; });
    std::vector<int> nb2, ic2;
    for (auto k : order) {
      nb2.push_back(nb[k]);
      ic2.push_back(ic[k]);
    }
    nb = std::move(nb2);
    ic = std::move(ic2);
  }
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto &nb : nbrs_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

int Graph::edge_id(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
  const auto &nb = nbrs_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return inc_[static_cast<std::size_t>(u)][static_cast<std::size_t>(it - nb.begin())];
}

std::optional<std::string> Graph::label(int v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

void Graph::set_label(int v, std::string text) {
  if (v < 0 || v >= n_) throw GraphError("label for missing vertex " + std::to_string(v));
  labels_[v] = std::move(text);
}

int GraphBuilder::add_vertex(std::string label) {
  if (!label.empty()) labels_[n_] = std::move(label);
  return n_++;
}

void GraphBuilder::add_edge(int u, int v) {
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw GraphError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  Edge e = make_edge(u, v);
  if (!seen_.emplace(e, true).second)
    throw GraphError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
  edges_.push_back(e);
}

void GraphBuilder::ensure_edge(int u, int v) {
  if (!has_edge(u, v)) add_edge(u, v);
}

bool GraphBuilder::has_edge(int u, int v) const { return seen_.count(make_edge(u, v)) > 0; }

void GraphBuilder::label(int v, std::string text) { labels_[v] = std::move(text); }

Graph GraphBuilder::build() const {
  Graph g(n_, edges_);
  for (const auto &[v, t] : labels_) g.set_label(v, t);
  return g;
}

DiGraph::DiGraph(int n, std::vector<std::pair<int, int>> arcs) : n_(n), arcs_(std::move(arcs)) {
  for (auto [u, v] : arcs_) {
    if (u == v) throw GraphError("loop arc at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n) throw GraphError("arc endpoint out of range");
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) throw GraphError("duplicate arc");
}

Graph disjoint_union(const std::vector<Graph> &gs) {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<int> parts{0};
  std::map<int, std::string> labels;
  for (const auto &g : gs) {
    for (auto e : g.edges()) edges.push_back({e.u + n, e.v + n});
    for (const auto &[v, t] : g.labels()) labels[v + n] = t;
    n += g.n();
    parts.push_back(n);
  }
  Graph out(n, std::move(edges));
  for (const auto &[v, t] : labels) out.set_label(v, t);
  out.set_parts(std::move(parts));
  return out;
}

Graph induced_subgraph(const Graph &g, const std::vector<int> &vertices) {
  std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto e : g.edges()) {
    int a = pos[static_cast<std::size_t>(e.u)], b = pos[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back(make_edge(a, b));
  }
  Graph out(static_cast<int>(vertices.size()), std::move(edges));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (auto l = g.label(vertices[i])) out.set_label(static_cast<int>(i), *l);
  return out;
}

Graph edge_subgraph(const Graph &g, const std::vector<int> &edge_ids) {
  std::vector<Edge> edges;
  edges.reserve(edge_ids.size());
  for (int id : edge_ids) edges.push_back(g.edge(id));
  return Graph(g.n(), std::move(edges));
}

Graph without_isolated(const Graph &g, std::vector<int> *kept) {
  std::vector<int> keep;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  if (kept) *kept = keep;
  return induced_subgraph(g, keep);
}

std::vector<int> component_ids(const Graph &g, int *count) {
  std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = c;
          stack.push_back(w);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

std::vector<std::vector<int>> components(const Graph &g) {
  int c = 0;
  auto ids = component_ids(g, &c);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(c));
  for (int v = 0; v < g.n(); ++v) out[static_cast<std::size_t>(ids[static_cast<std::size_t>(v)])].push_back(v);
  return out;
}

std::vector<Graph> component_graphs(const Graph &g) {
  std::vector<Graph> out;
  for (const auto &c : components(g)) out.push_back(induced_subgraph(g, c));
  return out;
}

bool is_connected(const Graph &g) {
  int c = 0;
  component_ids(g, &c);
  return c <= 1;
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, std::move(e));
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(e));
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph(leaves + 1, std::move(e));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph(a + b, std::move(e));
}

Graph empty_graph(int n) { return Graph(n); }

Graph copies(const Graph &g, int k) {
  Graph out = disjoint_union(std::vector<Graph>(static_cast<std::size_t>(std::max(k, 0)), g));
  out.set_parts({});
  return out;
}

} // namespace gulf
