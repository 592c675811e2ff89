#pragma once

// Helpers shared by the unit tests: seeded random graphs, small-graph
// enumeration, and brute-force oracles written independently of the library
// algorithms they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "gulf/graph.hpp"

namespace testing {

inline gulf::Graph random_graph(std::mt19937 &rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<gulf::Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) es.push_back({i, j});
  return gulf::Graph(n, es);
}

inline gulf::Graph random_tree(std::mt19937 &rng, int n) {
  std::vector<gulf::Edge> es;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    es.push_back(gulf::make_edge(pick(rng), v));
  }
  return gulf::Graph(n, es);
}

// Random forest: a random tree with some edges removed.
inline gulf::Graph random_forest(std::mt19937 &rng, int n) {
  auto t = random_tree(rng, n);
  std::bernoulli_distribution keep(0.8);
  std::vector<gulf::Edge> es;
  for (auto e : t.edges())
    if (keep(rng)) es.push_back(e);
  return gulf::Graph(n, es);
}

// Every labelled graph on n vertices (2^(n choose 2) of them), n <= 6.
inline std::vector<gulf::Graph> all_labelled_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
  std::vector<gulf::Graph> out;
  for (unsigned long mask = 0; mask < (1UL << slots.size()); ++mask) {
    std::vector<gulf::Edge> es;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1UL) es.push_back({slots[k].first, slots[k].second});
    out.push_back(gulf::Graph(n, es));
  }
  return out;
}

// Brute-force canonical form: lexicographically smallest sorted edge list over
// all vertex permutations. Only for n <= 7.
inline std::vector<gulf::Edge> brute_canonical(const gulf::Graph &g) {
  std::vector<int> perm(g.n());
  for (int i = 0; i < g.n(); ++i) perm[i] = i;
  std::vector<gulf::Edge> best;
  bool first = true;
  do {
    std::vector<gulf::Edge> es;
    for (auto e : g.edges()) es.push_back(gulf::make_edge(perm[e.u], perm[e.v]));
    std::sort(es.begin(), es.end());
    if (first || es < best) best = es;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// One representative per isomorphism class on n vertices (n <= 6).
inline std::vector<gulf::Graph> all_unlabelled_graphs(int n) {
  std::set<std::vector<gulf::Edge>> seen;
  std::vector<gulf::Graph> out;
  for (auto &g : all_labelled_graphs(n)) {
    auto c = brute_canonical(g);
    if (seen.insert(c).second) out.push_back(gulf::Graph(n, c));
  }
  return out;
}

// Naive covering numbers for a class given by a list of connected members
// (so the union closure is just vertex-disjoint unions). Guests are all
// homomorphic images of members; covers are enumerated by repeatedly picking
// a guest through the lowest uncovered edge. Host needs m <= 32.
struct NaiveValues {
  int global = 0, union_ = 0, local = 0, folded = 0;
};

namespace detail {

struct NaiveGuest {
  std::uint32_t edges = 0;
  std::vector<int> load; // preimages per host vertex
  bool injective = true;
};

inline std::vector<NaiveGuest> naive_guests(const gulf::Graph &host, const std::vector<gulf::Graph> &members) {
  std::map<std::pair<std::uint32_t, std::vector<int>>, bool> seen;
  std::vector<NaiveGuest> out;
  for (const auto &g : members) {
    std::vector<int> f(g.n(), 0);
    std::function<void(int)> rec = [&](int x) {
      if (x == g.n()) {
        NaiveGuest ng;
        ng.load.assign(host.n(), 0);
        for (auto e : g.edges()) {
          for (int id = 0; id < host.m(); ++id)
            if (gulf::make_edge(f[e.u], f[e.v]) == host.edge(id)) ng.edges |= 1U << id;
        }
        for (int y = 0; y < g.n(); ++y) ng.injective = ng.injective && ++ng.load[f[y]] == 1;
        if (ng.edges && !seen[{ng.edges, ng.load}]) {
          seen[{ng.edges, ng.load}] = true;
          out.push_back(ng);
        }
        return;
      }
      for (int v = 0; v < host.n(); ++v) {
        bool ok = true;
        for (auto e : g.edges()) {
          int other = e.u == x ? e.v : e.v == x ? e.u : -1;
          if (other >= 0 && other < x && (f[other] == v || !host.adjacent(f[other], v))) ok = false;
        }
        if (!ok) continue;
        f[x] = v;
        rec(x + 1);
      }
    };
    rec(0);
  }
  return out;
}

inline int naive_chromatic(const std::vector<std::vector<bool>> &adj) {
  const int n = static_cast<int>(adj.size());
  for (int k = 1;; ++k) {
    std::vector<int> col(n, -1);
    std::function<bool(int)> rec = [&](int i) {
      if (i == n) return true;
      for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int j = 0; j < i; ++j) ok = ok && !(adj[i][j] && col[j] == c);
        if (!ok) continue;
        col[i] = c;
        if (rec(i + 1)) return true;
      }
      return false;
    };
    if (n == 0 || rec(0)) return n == 0 ? 0 : k;
  }
}

} // namespace detail

inline NaiveValues naive_cover_numbers(const gulf::Graph &host, const std::vector<gulf::Graph> &members) {
  NaiveValues res;
  if (host.m() == 0) return res;
  const std::uint32_t full = host.m() == 32 ? ~0U : (1U << host.m()) - 1;
  auto all = detail::naive_guests(host, members);
  std::vector<detail::NaiveGuest> inj;
  for (const auto &g : all)
    if (g.injective) inj.push_back(g);

  // objective: 0 global, 1 union, 2 local, 3 folded
  auto best_for = [&](const std::vector<detail::NaiveGuest> &pool, int objective) {
    int best = 1 << 20;
    std::vector<int> chosen, load(host.n(), 0);
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t covered) {
      int peak = 0;
      for (int l : load) peak = std::max(peak, l);
      int now = objective == 0 ? static_cast<int>(chosen.size()) : peak;
      if (now >= best) return;
      if (covered == full) {
        if (objective == 1) {
          std::vector<std::vector<bool>> adj(chosen.size(), std::vector<bool>(chosen.size(), false));
          for (std::size_t a = 0; a < chosen.size(); ++a)
            for (std::size_t b = 0; b < chosen.size(); ++b)
              for (int v = 0; v < host.n(); ++v)
                if (a != b && pool[chosen[a]].load[v] && pool[chosen[b]].load[v]) adj[a][b] = true;
          now = detail::naive_chromatic(adj);
        }
        best = std::min(best, now);
        return;
      }
      int low = 0;
      while (covered >> low & 1U) ++low;
      for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
        if (!(pool[i].edges >> low & 1U)) continue;
        chosen.push_back(i);
        for (int v = 0; v < host.n(); ++v) load[v] += pool[i].load[v];
        rec(covered | pool[i].edges);
        for (int v = 0; v < host.n(); ++v) load[v] -= pool[i].load[v];
        chosen.pop_back();
      }
    };
    rec(0);
    return best;
  };
  res.global = best_for(inj, 0);
  res.union_ = best_for(inj, 1);
  res.local = best_for(inj, 2);
  res.folded = best_for(all, 3);
  return res;
}

} // namespace testing
