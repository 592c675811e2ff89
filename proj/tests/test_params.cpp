#include <doctest.h>

#include <functional>

#include "gulf/params.hpp"
#include "support.hpp"

using namespace gulf;

namespace {

bool brute_colorable(const Graph &g, int k) {
  std::vector<int> col(g.n(), -1);
  std::function<bool(int)> rec = [&](int v) {
    if (v == g.n()) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (w < v && col[w] == c) ok = false;
      if (!ok) continue;
      col[v] = c;
      if (rec(v + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

Rational brute_mad(const Graph &g) {
  Rational best(0);
  for (unsigned S = 1; S < (1U << g.n()); ++S) {
    int e = 0, k = __builtin_popcount(S);
    for (auto ed : g.edges())
      if ((S >> ed.u & 1U) && (S >> ed.v & 1U)) ++e;
    best = std::max(best, Rational(2 * e, k));
  }
  return best;
}

int brute_treewidth(const Graph &g) {
  std::vector<int> order(g.n());
  for (int i = 0; i < g.n(); ++i) order[i] = i;
  int best = g.n();
  do {
    best = std::min(best, decomposition_from_order(g, order).width());
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// Minimum number of forests partitioning E(g), by exhaustive assignment.
int brute_forest_partition(const Graph &g) {
  if (g.m() == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<std::vector<int>> parent(k, std::vector<int>(g.n()));
    std::vector<int> assign(g.m());
    std::function<bool(int)> rec = [&](int e) {
      if (e == g.m()) return true;
      for (int f = 0; f < k; ++f) {
        assign[e] = f;
        // check forest f acyclic using union-find over assigned edges
        std::vector<int> uf(g.n());
        for (int i = 0; i < g.n(); ++i) uf[i] = i;
        std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
        bool ok = true;
        for (int j = 0; j <= e && ok; ++j) {
          if (assign[j] != f) continue;
          int a = find(g.edge(j).u), b = find(g.edge(j).v);
          if (a == b) ok = false;
          uf[a] = b;
        }
        if (ok && rec(e + 1)) return true;
      }
      return false;
    };
    if (rec(0)) return k;
  }
}

bool hakimi_condition(const Graph &g, int k) {
  for (unsigned S = 1; S < (1U << g.n()); ++S) {
    int e = 0;
    for (auto ed : g.edges())
      if ((S >> ed.u & 1U) && (S >> ed.v & 1U)) ++e;
    if (e > k * __builtin_popcount(S)) return false;
  }
  return true;
}

} // namespace

TEST_CASE("chromatic number examples") {
  CHECK(chromatic_number(complete_graph(4)).value == 4);
  CHECK(chromatic_number(cycle_graph(5)).value == 3);
  CHECK(chromatic_number(cycle_graph(6)).value == 2);
  CHECK(chromatic_number(Graph(3)).value == 1);
  auto r = chromatic_number(complete_graph(16));
  CHECK(r.value == 16);
  CHECK(is_proper_coloring(complete_graph(16), r.coloring));
}

TEST_CASE("chromatic number against exhaustive colouring") {
  std::mt19937 rng(21);
  for (int i = 0; i < 120; ++i) {
    auto g = testing::random_graph(rng, 3 + i % 8, 0.2 + 0.6 * (i % 5) / 5.0);
    auto r = chromatic_number(g);
    REQUIRE(r.decided);
    CHECK(is_proper_coloring(g, r.coloring));
    CHECK(*std::max_element(r.coloring.begin(), r.coloring.end()) + 1 == r.value);
    CHECK(brute_colorable(g, r.value));
    if (r.value > 1) CHECK(!brute_colorable(g, r.value - 1));
  }
}

TEST_CASE("chromatic number budget yields undecided") {
  // a tiny node budget on a dense random graph stops the exact phase
  std::mt19937 rng(2);
  auto g = testing::random_graph(rng, 40, 0.5);
  auto r = chromatic_number(g, 5);
  if (!r.decided) {
    CHECK(r.lower < r.upper);
    CHECK(is_proper_coloring(g, r.coloring));
  }
}

TEST_CASE("mad") {
  CHECK(mad(cycle_graph(5)).value == Rational(2));
  CHECK(mad(complete_graph(4)).value == Rational(3));
  CHECK(mad(star_graph(4)).value == Rational(8, 5));
  CHECK(mad(star_graph(4)).value == brute_mad(star_graph(4)));
  std::mt19937 rng(8);
  for (int i = 0; i < 60; ++i) {
    auto g = testing::random_graph(rng, 2 + i % 9, 0.4);
    auto r = mad(g);
    CHECK(r.value == brute_mad(g));
    CHECK(r.value >= Rational(2 * g.m(), g.n()));
    auto w = induced_subgraph(g, r.witness);
    if (g.m() > 0) CHECK(Rational(2 * w.m(), w.n()) == r.value);
  }
}

TEST_CASE("mad on graphs beyond the brute-force range") {
  // dense part planted inside a long sparse path
  auto g = disjoint_union({complete_graph(5), path_graph(30)});
  CHECK(mad(g).value == Rational(4));
  auto h = disjoint_union({complete_bipartite(3, 4), cycle_graph(20)});
  auto r = mad(h);
  CHECK(r.value == Rational(24, 7));
  auto w = induced_subgraph(h, r.witness);
  CHECK(Rational(2 * w.m(), w.n()) == r.value);
  std::mt19937 rng(4);
  for (int i = 0; i < 10; ++i) {
    auto small = testing::random_graph(rng, 9, 0.5);
    auto big = disjoint_union({small, path_graph(25)});
    CHECK(mad(big).value == std::max(brute_mad(small), Rational(48, 25)));
  }
}

TEST_CASE("treewidth") {
  CHECK(treewidth(path_graph(6)).width == 1);
  CHECK(treewidth(complete_graph(5)).width == 4);
  CHECK(treewidth(cycle_graph(5)).width == 2);
  CHECK(treewidth(Graph(3)).width == 0);
  std::mt19937 rng(13);
  for (int i = 0; i < 60; ++i) {
    auto g = testing::random_graph(rng, 2 + i % 6, 0.5);
    auto r = treewidth(g);
    CHECK(r.exact);
    CHECK(check_tree_decomposition(g, r.decomposition).empty());
    CHECK(r.width == brute_treewidth(g));
  }
  for (int i = 0; i < 20; ++i) {
    auto t = testing::random_tree(rng, 2 + i);
    auto r = treewidth(t);
    CHECK(r.width == 1);
    CHECK(check_tree_decomposition(t, r.decomposition).empty());
  }
}

TEST_CASE("arboricity") {
  CHECK(arboricity_nash_williams(path_graph(5)) == 1);
  CHECK(arboricity_nash_williams(complete_graph(5)) == 3);
  CHECK(arboricity_nash_williams(complete_graph(4)) == 2);
  CHECK(arboricity_nash_williams(Graph(4)) == 0);
  std::mt19937 rng(17);
  for (int i = 0; i < 40; ++i) {
    auto g = testing::random_graph(rng, 2 + i % 6, 0.6);
    CHECK(arboricity_nash_williams(g) == brute_forest_partition(g));
  }
  // flow-based path agrees with the subset formula on the dense part
  auto g = disjoint_union({complete_graph(6), path_graph(20)});
  CHECK(arboricity_nash_williams(g) == 3);
}

TEST_CASE("planarity") {
  CHECK(is_planar(complete_graph(4)));
  CHECK(!is_planar(complete_graph(5)));
  CHECK(!is_planar(complete_bipartite(3, 3)));
  CHECK(is_planar(cycle_graph(30)));
}

TEST_CASE("structural predicates") {
  auto s = structural_predicates(star_graph(5));
  CHECK(s.is_star);
  CHECK(s.is_star_forest);
  CHECK(s.is_complete_bipartite);
  Graph c4p(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
  CHECK(structural_predicates(c4p).is_hairy_cycle);
  auto p4 = structural_predicates(path_graph(4));
  CHECK(p4.is_linear_forest);
  CHECK(p4.is_forest);
  CHECK(!p4.is_star);
  CHECK(!is_hairy_cycle(path_graph(4)));
  CHECK(is_hairy_cycle(cycle_graph(3)));
  CHECK(!is_hairy_cycle(Graph(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {1, 5}})));
  CHECK(is_complete(complete_graph(5)));
  auto six = cycle_graph(6);
  auto c6 = structural_predicates(six);
  REQUIRE(c6.is_bipartite);
  for (auto e : six.edges()) CHECK(c6.bipartition[e.u] != c6.bipartition[e.v]);
  CHECK(!structural_predicates(cycle_graph(5)).is_bipartite);
  CHECK(contains_c4(complete_graph(4)));
  CHECK(!contains_c4(cycle_graph(5)));
  CHECK(is_star_forest(Graph(7, {{0, 1}, {0, 2}, {3, 4}})));
  CHECK(!is_star_forest(path_graph(4)));
}

TEST_CASE("orientation with bounded outdegree") {
  CHECK(orientation_with_max_outdegree(cycle_graph(4), 1).has_value());
  CHECK(!orientation_with_max_outdegree(complete_graph(4), 1).has_value());
  std::mt19937 rng(19);
  CHECK(orientation_with_max_outdegree(testing::random_tree(rng, 12), 1).has_value());
  for (int i = 0; i < 80; ++i) {
    auto g = testing::random_graph(rng, 2 + i % 9, 0.5);
    for (int k = 0; k <= 3; ++k) {
      auto o = orientation_with_max_outdegree(g, k);
      CHECK(o.has_value() == hakimi_condition(g, k));
      if (!o) continue;
      std::vector<int> out(g.n(), 0);
      for (int e = 0; e < g.m(); ++e) {
        auto [t, h] = (*o)[e];
        CHECK(make_edge(t, h) == g.edge(e));
        ++out[t];
      }
      for (int d : out) CHECK(d <= k);
    }
  }
}
