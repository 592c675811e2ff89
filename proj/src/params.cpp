#include "gulf/params.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "flow.hpp"

namespace gulf {

// ---------------------------------------------------------------- colouring

bool is_proper_coloring(const Graph &g, const std::vector<int> &coloring) {
  if (static_cast<int>(coloring.size()) != g.n()) return false;
  for (int c : coloring)
    if (c < 0) return false;
  for (auto e : g.edges())
    if (coloring[e.u] == coloring[e.v]) return false;
  return true;
}

namespace {

std::vector<int> greedy_clique(const Graph &g) {
  std::vector<int> best;
  for (int s = 0; s < g.n(); ++s) {
    std::vector<int> cl{s};
    std::vector<int> cand(g.neighbors(s));
    std::sort(cand.begin(), cand.end(), [&](int a, int b) {
      return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    for (int v : cand) {
      bool ok = true;
      for (int w : cl)
        if (!g.adjacent(v, w)) {
          ok = false;
          break;
        }
      if (ok) cl.push_back(v);
    }
    if (cl.size() > best.size()) best = cl;
  }
  return best;
}

class Colorer {
public:
  Colorer(const Graph &g, std::uint64_t limit) : g_(g), limit_(limit) {}

  // nullopt: budget hit; empty vector: not k-colourable.
  std::optional<std::vector<int>> try_k(int k, const std::vector<int> &clique) {
    k_ = k;
    const int n = g_.n();
    color_.assign(n, -1);
    forb_.assign(n, std::vector<int>(k, 0));
    sat_.assign(n, 0);
    aborted_ = false;
    int used = 0;
    for (std::size_t i = 0; i < clique.size() && static_cast<int>(i) < k; ++i) {
      assign(clique[i], static_cast<int>(i));
      used = static_cast<int>(i) + 1;
    }
    if (static_cast<int>(clique.size()) > k) return std::vector<int>{};
    int left = n - used;
    bool ok = rec(left, used);
    if (aborted_) return std::nullopt;
    if (!ok) return std::vector<int>{};
    return color_;
  }

  std::uint64_t nodes = 0;

private:
  void assign(int v, int c) {
    color_[v] = c;
    for (int w : g_.neighbors(v))
      if (forb_[w][c]++ == 0) ++sat_[w];
  }
  void unassign(int v) {
    int c = color_[v];
    color_[v] = -1;
    for (int w : g_.neighbors(v))
      if (--forb_[w][c] == 0) --sat_[w];
  }

  bool rec(int left, int used) {
    if (left == 0) return true;
    if (++nodes > limit_) {
      aborted_ = true;
      return false;
    }
    // DSATUR choice; ties by uncoloured degree, then lowest index.
    int best = -1, best_deg = -1;
    for (int v = 0; v < g_.n(); ++v) {
      if (color_[v] >= 0) continue;
      int d = 0;
      for (int w : g_.neighbors(v)) d += color_[w] < 0;
      if (best < 0 || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && d > best_deg)) {
        best = v;
        best_deg = d;
      }
    }
    if (sat_[best] >= k_) return false;
    int top = std::min(k_ - 1, used);
    for (int c = 0; c <= top; ++c) {
      if (forb_[best][c]) continue;
      assign(best, c);
      if (rec(left - 1, std::max(used, c + 1))) return true;
      unassign(best);
      if (aborted_) return false;
    }
    return false;
  }

  const Graph &g_;
  std::uint64_t limit_;
  int k_ = 0;
  std::vector<int> color_, sat_;
  std::vector<std::vector<int>> forb_;
  bool aborted_ = false;
};

std::vector<int> dsatur_greedy(const Graph &g) {
  const int n = g.n();
  std::vector<int> color(n, -1);
  std::vector<std::vector<bool>> forb(n, std::vector<bool>(n + 1, false));
  std::vector<int> sat(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (color[v] < 0 && (best < 0 || sat[v] > sat[best] || (sat[v] == sat[best] && g.degree(v) > g.degree(best))))
        best = v;
    int c = 0;
    while (forb[best][c]) ++c;
    color[best] = c;
    for (int w : g.neighbors(best))
      if (!forb[w][c]) {
        forb[w][c] = true;
        ++sat[w];
      }
  }
  return color;
}

} // namespace

ChromaticResult chromatic_number(const Graph &g, std::uint64_t node_limit) {
  ChromaticResult r;
  if (g.n() == 0) {
    r.decided = true;
    return r;
  }
  auto clique = greedy_clique(g);
  r.coloring = dsatur_greedy(g);
  r.upper = *std::max_element(r.coloring.begin(), r.coloring.end()) + 1;
  r.lower = static_cast<int>(clique.size());
  Colorer col(g, node_limit);
  while (r.lower < r.upper) {
    auto res = col.try_k(r.lower, clique);
    r.nodes = col.nodes;
    if (!res) return r; // undecided
    if (!res->empty()) {
      r.coloring = *res;
      r.upper = r.lower;
      break;
    }
    ++r.lower;
  }
  r.decided = true;
  r.value = r.upper;
  r.lower = r.upper;
  return r;
}

// ---------------------------------------------------------------- density

namespace {

// Maximises b|E(S)| - a|S| over vertex sets S; returns S (possibly empty).
std::vector<int> densest_selection(const Graph &g, std::int64_t a, std::int64_t b, std::int64_t *value) {
  const int n = g.n(), m = g.m();
  const int s = n + m, t = n + m + 1;
  detail::MaxFlow f(n + m + 2);
  for (int e = 0; e < m; ++e) {
    f.add(s, n + e, b);
    f.add(n + e, g.edge(e).u, detail::MaxFlow::inf);
    f.add(n + e, g.edge(e).v, detail::MaxFlow::inf);
  }
  for (int v = 0; v < n; ++v) f.add(v, t, a);
  auto cut = f.run(s, t);
  *value = b * m - cut;
  auto side = f.source_side(s);
  std::vector<int> S;
  for (int v = 0; v < n; ++v)
    if (side[v]) S.push_back(v);
  return S;
}

int edges_within(const Graph &g, const std::vector<int> &S) {
  int c = 0;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j) c += g.adjacent(S[i], S[j]);
  return c;
}

} // namespace

MadResult mad(const Graph &g) {
  const int n = g.n();
  MadResult r{Rational(0), {}};
  if (n == 0) return r;
  r.witness = {0};
  if (g.m() == 0) return r;
  if (n <= 20) {
    std::vector<std::uint32_t> adj(n, 0);
    for (auto e : g.edges()) {
      adj[e.u] |= 1U << e.v;
      adj[e.v] |= 1U << e.u;
    }
    std::uint32_t best_mask = 1;
    Rational best(0);
    for (std::uint32_t S = 1; S < (1U << n); ++S) {
      int twice = 0;
      for (std::uint32_t x = S; x; x &= x - 1) twice += std::popcount(adj[std::countr_zero(x)] & S);
      Rational d(twice, std::popcount(S));
      if (d > best) {
        best = d;
        best_mask = S;
      }
    }
    r.value = best;
    r.witness.clear();
    for (int v = 0; v < n; ++v)
      if (best_mask >> v & 1U) r.witness.push_back(v);
    return r;
  }
  // Dinkelbach iteration on the density |E(S)|/|S| with exact selections.
  std::vector<int> S(n);
  for (int v = 0; v < n; ++v) S[v] = v;
  std::int64_t num = g.m(), den = n;
  while (true) {
    std::int64_t val = 0;
    auto T = densest_selection(g, num, den, &val);
    if (val <= 0 || T.empty()) break;
    S = T;
    num = edges_within(g, S);
    den = static_cast<std::int64_t>(S.size());
  }
  r.value = Rational(2 * num, den);
  r.witness = S;
  return r;
}

// ---------------------------------------------------------------- arboricity

int arboricity_nash_williams(const Graph &g) {
  const int n = g.n();
  if (g.m() == 0) return 0;
  if (n <= 20) {
    std::vector<std::uint32_t> adj(n, 0);
    for (auto e : g.edges()) {
      adj[e.u] |= 1U << e.v;
      adj[e.v] |= 1U << e.u;
    }
    int best = 0;
    for (std::uint32_t S = 1; S < (1U << n); ++S) {
      int k = std::popcount(S);
      if (k < 2) continue;
      int twice = 0;
      for (std::uint32_t x = S; x; x &= x - 1) twice += std::popcount(adj[std::countr_zero(x)] & S);
      int e = twice / 2;
      best = std::max(best, (e + k - 2) / (k - 1));
    }
    return best;
  }
  // Smallest k with |E(S)| <= k(|S|-1) for every S; checked per forced vertex.
  for (int k = 1;; ++k) {
    bool ok = static_cast<std::int64_t>(g.m()) <= static_cast<std::int64_t>(k) * (n - 1);
    for (int v = 0; ok && v < n; ++v) {
      const int m = g.m();
      const int s = n + m, t = n + m + 1;
      detail::MaxFlow f(n + m + 2);
      for (int e = 0; e < m; ++e) {
        f.add(s, n + e, 1);
        f.add(n + e, g.edge(e).u, detail::MaxFlow::inf);
        f.add(n + e, g.edge(e).v, detail::MaxFlow::inf);
      }
      for (int w = 0; w < n; ++w) f.add(w, t, k);
      f.add(s, v, detail::MaxFlow::inf);
      std::int64_t best = m - f.run(s, t); // max over S containing v of |E(S)| - k|S|
      if (best > -k) ok = false;
    }
    if (ok) return k;
  }
}

// ---------------------------------------------------------------- orientation

std::optional<std::vector<std::pair<int, int>>> orientation_with_max_outdegree(const Graph &g, int k) {
  const int n = g.n(), m = g.m();
  if (k < 0) return std::nullopt;
  const int s = n + m, t = n + m + 1;
  detail::MaxFlow f(n + m + 2);
  std::vector<std::pair<int, int>> arcs(m);
  for (int e = 0; e < m; ++e) {
    f.add(s, n + e, 1);
    arcs[e].first = f.add(n + e, g.edge(e).u, 1);
    arcs[e].second = f.add(n + e, g.edge(e).v, 1);
  }
  for (int v = 0; v < n; ++v) f.add(v, t, k);
  if (f.run(s, t) != m) return std::nullopt;
  std::vector<std::pair<int, int>> out(m);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edge(e);
    // the endpoint receiving the edge's unit of flow is its tail
    if (f.flow_on(arcs[e].first) > 0)
      out[e] = {u, v};
    else
      out[e] = {v, u};
  }
  return out;
}

// ---------------------------------------------------------------- treewidth

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto &b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return std::max(w, 0);
}

std::string check_tree_decomposition(const Graph &g, const TreeDecomposition &td) {
  const int k = td.tree.n();
  if (static_cast<int>(td.bags.size()) != k) return "bag count differs from tree size";
  if (g.n() > 0 && k == 0) return "no bags";
  if (k > 0 && (td.tree.m() != k - 1 || !is_connected(td.tree))) return "decomposition graph is not a tree";
  std::vector<std::vector<int>> where(g.n());
  for (int x = 0; x < k; ++x)
    for (int v : td.bags[x]) {
      if (v < 0 || v >= g.n()) return "bag holds unknown vertex";
      where[v].push_back(x);
    }
  for (int v = 0; v < g.n(); ++v) {
    if (where[v].empty()) return "vertex " + std::to_string(v) + " in no bag";
    auto sub = induced_subgraph(td.tree, where[v]);
    if (!is_connected(sub)) return "bags of vertex " + std::to_string(v) + " are not a subtree";
  }
  for (auto e : g.edges()) {
    bool ok = false;
    for (int x : where[e.u])
      if (std::binary_search(td.bags[x].begin(), td.bags[x].end(), e.v)) ok = true;
    if (!ok) return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " in no bag";
  }
  return {};
}

TreeDecomposition decomposition_from_order(const Graph &g, const std::vector<int> &order) {
  const int n = g.n();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<Bitset> adj;
  for (int v = 0; v < n; ++v) adj.push_back(g.adjacency(v));
  TreeDecomposition td;
  td.bags.resize(n);
  std::vector<Edge> tree_edges;
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> later;
    adj[v].for_each([&](std::size_t w) {
      if (pos[w] > i) later.push_back(static_cast<int>(w));
    });
    for (int a : later)
      for (int b : later)
        if (a != b) adj[a].set(b);
    td.bags[i] = later;
    td.bags[i].push_back(v);
    std::sort(td.bags[i].begin(), td.bags[i].end());
    if (later.empty()) {
      roots.push_back(i);
    } else {
      int p = n;
      for (int w : later) p = std::min(p, pos[w]);
      tree_edges.push_back(make_edge(i, p));
    }
  }
  for (std::size_t r = 1; r < roots.size(); ++r) tree_edges.push_back(make_edge(roots[r - 1], roots[r]));
  td.tree = Graph(n, tree_edges);
  return td;
}

namespace {

std::vector<int> min_fill_order(const Graph &g) {
  const int n = g.n();
  std::vector<Bitset> adj;
  for (int v = 0; v < n; ++v) adj.push_back(g.adjacency(v));
  std::vector<bool> gone(n, false);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_fill = -1;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      std::vector<int> nb;
      adj[v].for_each([&](std::size_t w) { nb.push_back(static_cast<int>(w)); });
      long fill = 0;
      for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b) fill += !adj[nb[a]].test(nb[b]);
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    std::vector<int> nb;
    adj[best].for_each([&](std::size_t w) { nb.push_back(static_cast<int>(w)); });
    for (int a : nb) {
      adj[a].reset(best);
      for (int b : nb)
        if (a != b) adj[a].set(b);
    }
    gone[best] = true;
    order.push_back(best);
  }
  return order;
}

int order_width(const Graph &g, const std::vector<int> &order) {
  return decomposition_from_order(g, order).width();
}

// Exact elimination-order search over subsets of a connected graph with at
// most 32 vertices.
class ExactTw {
public:
  explicit ExactTw(const Graph &g) : n_(g.n()), adj_(g.n(), 0) {
    for (auto e : g.edges()) {
      adj_[e.u] |= 1U << e.v;
      adj_[e.v] |= 1U << e.u;
    }
    all_ = n_ == 32 ? ~0U : ((1U << n_) - 1);
  }

  std::optional<std::vector<int>> order_within(int k) {
    k_ = k;
    failed_.clear();
    order_.clear();
    if (rec(0)) return order_;
    return std::nullopt;
  }

private:
  std::uint32_t q_set(std::uint32_t S, int v) const {
    std::uint32_t reach = 1U << v, prev = 0;
    while (reach != prev) {
      prev = reach;
      std::uint32_t nb = 0;
      for (std::uint32_t x = reach; x; x &= x - 1) nb |= adj_[std::countr_zero(x)];
      reach |= nb & S;
    }
    std::uint32_t nb = 0;
    for (std::uint32_t x = reach; x; x &= x - 1) nb |= adj_[std::countr_zero(x)];
    return nb & ~S & ~(1U << v);
  }

  bool rec(std::uint32_t S) {
    std::uint32_t rest = all_ & ~S;
    if (std::popcount(rest) <= k_ + 1) {
      for (std::uint32_t x = rest; x; x &= x - 1) order_.push_back(std::countr_zero(x));
      return true;
    }
    if (failed_.count(S)) return false;
    // A simplicial vertex of small degree can always be eliminated first.
    for (std::uint32_t x = rest; x; x &= x - 1) {
      int v = std::countr_zero(x);
      std::uint32_t q = q_set(S, v);
      if (std::popcount(q) > k_) continue;
      bool clique = true;
      for (std::uint32_t y = q; y && clique; y &= y - 1) {
        int a = std::countr_zero(y);
        std::uint32_t qa = q_set(S, a);
        if ((q & ~(1U << a)) & ~qa) clique = false;
      }
      if (clique) {
        order_.push_back(v);
        if (rec(S | (1U << v))) return true;
        order_.pop_back();
        failed_.insert(S);
        return false;
      }
    }
    for (std::uint32_t x = rest; x; x &= x - 1) {
      int v = std::countr_zero(x);
      if (std::popcount(q_set(S, v)) > k_) continue;
      order_.push_back(v);
      if (rec(S | (1U << v))) return true;
      order_.pop_back();
    }
    failed_.insert(S);
    return false;
  }

  int n_;
  std::vector<std::uint32_t> adj_;
  std::uint32_t all_;
  int k_ = 0;
  std::unordered_set<std::uint32_t> failed_;
  std::vector<int> order_;
};

} // namespace

TreewidthResult treewidth(const Graph &g, int exact_limit) {
  TreewidthResult r;
  r.exact = true;
  std::vector<int> order;
  for (const auto &comp : components(g)) {
    Graph c = induced_subgraph(g, comp);
    auto heur = min_fill_order(c);
    int ub = order_width(c, heur);
    std::vector<int> best = heur;
    if (c.m() > 0 && !is_forest(c)) {
      if (c.n() <= std::min(exact_limit, 32)) {
        ExactTw ex(c);
        int lb = 2; // not a forest
        for (int k = lb; k < ub; ++k)
          if (auto o = ex.order_within(k)) {
            best = *o;
            break;
          }
      } else {
        r.exact = false;
      }
    }
    for (int v : best) order.push_back(comp[v]);
  }
  r.decomposition = decomposition_from_order(g, order);
  r.width = r.decomposition.width();
  return r;
}

// ---------------------------------------------------------------- planarity

bool is_planar(const Graph &g) {
  if (g.n() <= 4) return true;
  if (g.m() > 3 * g.n() - 6) return false;
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                   boost::property<boost::vertex_index_t, int>>;
  BG bg(g.n());
  for (auto e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// ---------------------------------------------------------------- predicates

std::optional<std::vector<int>> bipartition(const Graph &g) {
  std::vector<int> side(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> st{s};
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          st.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_forest(const Graph &g) {
  int c = 0;
  component_ids(g, &c);
  return g.m() == g.n() - c;
}

bool is_star(const Graph &g) {
  if (g.n() < 2 || g.m() != g.n() - 1) return false;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == g.n() - 1) return true;
  return false;
}

bool is_star_forest(const Graph &g) {
  if (!is_forest(g)) return false;
  // a forest is a star forest iff no edge joins two vertices of degree >= 2
  for (auto e : g.edges())
    if (g.degree(e.u) >= 2 && g.degree(e.v) >= 2) return false;
  return true;
}

bool is_linear_forest(const Graph &g) { return g.max_degree() <= 2 && is_forest(g); }

bool is_complete(const Graph &g) {
  return static_cast<long>(g.m()) == static_cast<long>(g.n()) * (g.n() - 1) / 2;
}

bool is_complete_bipartite(const Graph &g) {
  if (g.n() < 2 || !is_connected(g)) return false;
  auto bp = bipartition(g);
  if (!bp) return false;
  long a = std::count(bp->begin(), bp->end(), 0);
  long b = g.n() - a;
  return a > 0 && b > 0 && g.m() == a * b;
}

bool is_hairy_cycle(const Graph &g) {
  if (g.n() < 3 || g.m() != g.n() || !is_connected(g)) return false;
  // strip leaves once; what remains must be the cycle
  std::vector<bool> core(g.n(), true);
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 1) core[v] = false;
  for (int v = 0; v < g.n(); ++v) {
    if (!core[v]) {
      if (!core[g.neighbors(v)[0]]) return false;
      continue;
    }
    int d = 0;
    for (int w : g.neighbors(v)) d += core[w];
    if (d != 2) return false;
  }
  return true;
}

bool contains_c4(const Graph &g) {
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b)
      if (g.adjacency(a).count_and(g.adjacency(b)) >= 2) return true;
  return false;
}

StructuralFlags structural_predicates(const Graph &g) {
  StructuralFlags f;
  f.is_forest = is_forest(g);
  f.is_star = is_star(g);
  f.is_star_forest = is_star_forest(g);
  auto bp = bipartition(g);
  f.is_bipartite = bp.has_value();
  if (bp) f.bipartition = *bp;
  f.is_hairy_cycle = is_hairy_cycle(g);
  f.is_linear_forest = is_linear_forest(g);
  f.is_complete = is_complete(g);
  f.is_complete_bipartite = is_complete_bipartite(g);
  return f;
}

} // namespace gulf
