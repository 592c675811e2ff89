#include "gulf/constructions.hpp"

#include <map>
#include <string>

namespace gulf {

namespace {

std::string pt(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

} // namespace

Graph tw_hat_guest(int t, int i) {
  if (t < 4) throw ConstructionError("tw-sep needs t >= 4");
  if (i < 1 || i > t) throw ConstructionError("tw-sep guest index out of range");
  GraphBuilder b;
  for (int k = 0; k <= 2 * t; ++k) b.add_vertex("p" + std::to_string(k));
  for (int k = 0; k < 2 * t; ++k) b.add_edge(k, k + 1);
  for (int k = 0; k < t; ++k) b.add_edge(0, b.add_vertex("p0 leaf"));
  for (int k = 0; k < t; ++k) b.add_edge(2 * t, b.add_vertex("p" + std::to_string(2 * t) + " leaf"));
  b.add_edge(i, b.add_vertex("p" + std::to_string(i) + " leaf"));
  return b.build();
}

Graph tw_guest(int t, int i) { return copies(tw_hat_guest(t, i), t - 1); }

TwFamily build_tw_family(int t) {
  if (t < 4) throw ConstructionError("tw-sep needs t >= 4");
  TwFamily f;
  f.t = t;
  for (int i = 1; i <= t; ++i) {
    f.hat_guests.push_back(tw_hat_guest(t, i));
    f.guests.push_back(tw_guest(t, i));
  }
  const int hat = 4 * t + 2;
  GraphBuilder b;
  // where[i][j]: offset of the half of H_{i,j} (or H_{j,i}) that belongs to guest i,
  // together with whether it is the second half (sharing p0 with the first).
  std::map<std::pair<int, int>, std::pair<int, bool>> where;
  for (int i = 1; i <= t; ++i)
    for (int j = i + 1; j <= t; ++j) {
      const std::string tag = "H" + pt(i, j) + " ";
      const Graph &gi = f.hat_guests[i - 1];
      const Graph &gj = f.hat_guests[j - 1];
      int base = b.n();
      for (int x = 0; x < hat; ++x) b.add_vertex(tag + "A " + gi.label(x).value_or(""));
      for (auto e : gi.edges()) b.add_edge(base + e.u, base + e.v);
      int base2 = b.n();
      for (int x = 1; x < hat; ++x) b.add_vertex(tag + "B " + gj.label(x).value_or(""));
      auto mapj = [&](int x) { return x == 0 ? base : base2 + x - 1; };
      for (auto e : gj.edges()) b.add_edge(mapj(e.u), mapj(e.v));
      where[{i, j}] = {base, false};
      where[{j, i}] = {base2, true};
    }
  f.host = b.build();
  std::vector<CoverGuest> guests;
  for (int i = 1; i <= t; ++i) {
    CoverGuest g{f.guests[i - 1], {}};
    for (int j = 1; j <= t; ++j) {
      if (j == i) continue;
      auto [off, second] = where[{i, j}];
      int shared = second ? where[{j, i}].first : off;
      for (int x = 0; x < hat; ++x) g.map.push_back(second ? (x == 0 ? shared : off + x - 1) : off + x);
    }
    guests.push_back(std::move(g));
  }
  f.cover = finalize_cover(f.host, std::move(guests), "tw-sep");
  return f;
}

Graph grid_guest(int l, int i) {
  if (l < 4) throw ConstructionError("grid-sep needs l >= 4");
  if (i < 1 || i > l) throw ConstructionError("grid-sep guest index out of range");
  GraphBuilder b;
  for (int a = 0; a <= l + 1; ++a) b.add_vertex("v" + std::to_string(a));
  for (int a = 0; a <= l; ++a) b.add_edge(a, a + 1);
  int t1 = b.add_vertex("triangle"), t2 = b.add_vertex("triangle");
  b.add_edge(0, t1);
  b.add_edge(t1, t2);
  b.add_edge(t2, 0);
  int prev = l + 1;
  for (int k = 0; k < 2 * l; ++k) {
    int c = b.add_vertex("cycle");
    b.add_edge(prev, c);
    prev = c;
  }
  b.add_edge(prev, l + 1);
  for (int k = 0; k < l; ++k) b.add_edge(i, b.add_vertex("v" + std::to_string(i) + " leaf"));
  return b.build();
}

GridFamily build_grid_family(int l) {
  if (l < 4) throw ConstructionError("grid-sep needs l >= 4");
  GridFamily f;
  f.l = l;
  for (int i = 1; i <= l; ++i) f.guests.push_back(grid_guest(l, i));
  GraphBuilder b;
  std::map<std::pair<int, int>, int> grid;
  for (int i = 1; i <= l; ++i)
    for (int j = 1; i + j <= l + 1; ++j) grid[{i, j}] = b.add_vertex(pt(i, j));
  for (auto [ij, v] : grid) {
    auto [i, j] = ij;
    if (grid.count({i + 1, j})) b.add_edge(v, grid[{i + 1, j}]);
    if (grid.count({i, j + 1})) b.add_edge(v, grid[{i, j + 1}]);
  }
  std::map<std::pair<int, int>, std::vector<int>> pendants;
  for (int i = 1; i <= l; ++i) {
    int v = grid[{i, l + 1 - i}];
    for (int k = 0; k < l; ++k) {
      int p = b.add_vertex(pt(i, l + 1 - i) + " leaf");
      b.add_edge(v, p);
      pendants[{i, l + 1 - i}].push_back(p);
    }
  }
  std::map<int, std::vector<int>> triangle; // by j: x, y, z with x adjacent to (1,j)
  for (int j = 1; j <= l; ++j) {
    int x = b.add_vertex(pt(1, j) + " triangle"), y = b.add_vertex(pt(1, j) + " triangle"),
        z = b.add_vertex(pt(1, j) + " triangle");
    b.add_edge(grid[{1, j}], x);
    b.add_edge(x, y);
    b.add_edge(y, z);
    b.add_edge(z, x);
    triangle[j] = {x, y, z};
  }
  std::map<int, std::vector<int>> cycle; // by i: r, then the rest in cycle order
  for (int i = 1; i <= l; ++i) {
    std::vector<int> cyc;
    for (int k = 0; k < 2 * l + 1; ++k) cyc.push_back(b.add_vertex(pt(i, 1) + " cycle"));
    for (int k = 0; k < 2 * l + 1; ++k) b.add_edge(cyc[k], cyc[(k + 1) % (2 * l + 1)]);
    b.add_edge(grid[{i, 1}], cyc[0]);
    cycle[i] = cyc;
  }
  f.host = b.build();

  std::vector<CoverGuest> guests;
  for (int i = 1; i <= l; ++i) {
    CoverGuest g{f.guests[i - 1], VertexMap(f.guests[i - 1].n(), -1)};
    for (int a = 1; a <= i; ++a) g.map[a] = grid[{a, l + 1 - i}];
    for (int a = i; a <= l; ++a) g.map[a] = grid[{i, l + 1 - a}];
    const auto &tri = triangle[l + 1 - i];
    g.map[0] = tri[0];
    g.map[l + 2] = tri[1];
    g.map[l + 3] = tri[2];
    const auto &cyc = cycle[i];
    g.map[l + 1] = cyc[0];
    for (int k = 0; k < 2 * l; ++k) g.map[l + 4 + k] = cyc[k + 1];
    const auto &pend = pendants[{i, l + 1 - i}];
    for (int k = 0; k < l; ++k) g.map[3 * l + 4 + k] = pend[k];
    guests.push_back(std::move(g));
  }
  f.cover = finalize_cover(f.host, std::move(guests), "grid-sep");
  return f;
}

Cover build_hairy_star_cover(int n) {
  if (n < 1) throw ConstructionError("hairy-star needs n >= 1");
  Graph host = star_graph(n);
  if (n == 1) return finalize_cover(host, {{complete_graph(2), {0, 1}}}, "hairy-cycles+K2");
  // C4 a-x-b-y with n-2 leaves at a; a and b both go to the centre
  GraphBuilder b;
  int a = b.add_vertex("a"), x = b.add_vertex("x"), bb = b.add_vertex("b"), y = b.add_vertex("y");
  b.add_edge(a, x);
  b.add_edge(x, bb);
  b.add_edge(bb, y);
  b.add_edge(y, a);
  VertexMap map{0, 1, 0, 2};
  for (int k = 0; k < n - 2; ++k) {
    b.add_edge(a, b.add_vertex("leaf"));
    map.push_back(3 + k);
  }
  return finalize_cover(host, {{b.build(), map}}, "hairy-cycles+K2");
}

DiGraph complete_digraph(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) arcs.push_back({u, v});
  return DiGraph(n, arcs);
}

Graph shift_graph(const DiGraph &d) {
  const auto &arcs = d.arcs();
  const int k = static_cast<int>(arcs.size());
  GraphBuilder b;
  for (auto [u, v] : arcs) b.add_vertex(std::to_string(u) + ">" + std::to_string(v));
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q) {
      auto [u, v] = arcs[p];
      auto [x, y] = arcs[q];
      if (v == x || y == u) b.add_edge(p, q);
    }
  return b.build();
}

Cover shift_bipartite_local_cover(const DiGraph &d) {
  Graph host = shift_graph(d);
  const auto &arcs = d.arcs();
  std::vector<CoverGuest> guests;
  for (int v = 0; v < d.n(); ++v) {
    std::vector<int> in, out;
    for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
      if (arcs[a].second == v) in.push_back(a);
      if (arcs[a].first == v) out.push_back(a);
    }
    if (in.empty() || out.empty()) continue;
    CoverGuest g{complete_bipartite(static_cast<int>(in.size()), static_cast<int>(out.size())), {}};
    g.map = in;
    g.map.insert(g.map.end(), out.begin(), out.end());
    guests.push_back(std::move(g));
  }
  return finalize_cover(host, std::move(guests), "bipartite");
}

Cover bipartite_double_folded_cover(const Graph &h) {
  if (h.m() == 0) throw ConstructionError("double cover needs a host with an edge");
  const int n = h.n();
  std::vector<Edge> es;
  for (auto e : h.edges()) {
    es.push_back(make_edge(e.u, n + e.v));
    es.push_back(make_edge(e.v, n + e.u));
  }
  Graph g(2 * n, es);
  VertexMap map(2 * n);
  for (int v = 0; v < n; ++v) map[v] = map[n + v] = v;
  // isolated host vertices would add useless guest vertices; keep the
  // construction literal but report the measured values
  Cover c = finalize_cover(h, {{g, map}}, "bipartite");
  c.claims.injective = false;
  return c;
}

} // namespace gulf
