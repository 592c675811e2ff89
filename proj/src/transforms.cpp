#include "gulf/transforms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace gulf {

namespace {

void require_valid(const Cover &c, const GuestClass &cls, const char *what) {
  auto rep = verify_cover(c, cls);
  if (!rep.valid) throw TransformError(std::string(what) + " is not a valid cover: " + rep.first_violation());
}

TransformResult finish(Cover out, const GuestClass &cls, int bound, std::string text) {
  auto rep = verify_cover(out, cls);
  if (!rep.valid) throw TransformError("transform produced an invalid cover: " + rep.first_violation());
  int got = rep.achieved_globality;
  if (got > bound) throw TransformError("transform exceeded its bound: " + std::to_string(got) + " > " + text);
  return {std::move(out), bound, std::move(text)};
}

int ceil_log2(int x) {
  int b = 0;
  while ((1 << b) < x) ++b;
  return b;
}

int floor_of(const Rational &r) {
  auto q = r.num() / r.den();
  if (r.num() < 0 && q * r.den() != r.num()) --q;
  return static_cast<int>(q);
}

struct Pieces {
  std::vector<CoverGuest> guests;
  std::vector<std::vector<int>> layers;
};

// Appends a cover of a subgraph, mapped back into the host, as new layers.
void append_lifted(Pieces &acc, const Cover &part, const VertexMap &embedding) {
  const int base = static_cast<int>(acc.guests.size());
  for (const auto &g : part.guests) {
    CoverGuest ng{g.graph, {}};
    for (int x : g.map) ng.map.push_back(embedding[x]);
    acc.guests.push_back(std::move(ng));
  }
  if (part.claims.layers) {
    for (const auto &l : *part.claims.layers) {
      acc.layers.emplace_back();
      for (int gi : l) acc.layers.back().push_back(base + gi);
    }
  } else {
    for (std::size_t k = 0; k < part.guests.size(); ++k) acc.layers.push_back({base + static_cast<int>(k)});
  }
}

// Subgraph on the given host edges, without isolated vertices.
Subgraph edge_part(const Graph &host, const std::vector<int> &edge_ids) {
  std::vector<int> kept;
  Graph g = without_isolated(edge_subgraph(host, edge_ids), &kept);
  return {g, kept};
}

Cover without_layers(Cover c) {
  c.claims.layers.reset();
  c.claims.globality = static_cast<int>(c.guests.size());
  return c;
}

// Centre of each star component (the lower vertex of a K2), or -1.
std::vector<int> star_centres(const Graph &host) {
  std::vector<int> centre_of(host.n(), -1);
  for (const auto &comp : components(host)) {
    if (comp.size() < 2) continue;
    int c = comp.front();
    for (int v : comp)
      if (host.degree(v) > host.degree(c)) c = v;
    for (int v : comp) centre_of[v] = c;
  }
  return centre_of;
}

// Injective cover of a star forest whose guests each contain the centre of
// their component: the j-th guest at each star goes to layer j.
Cover star_forest_local_to_union(const Cover &local, const std::vector<int> &centre_of) {
  std::map<int, int> seen_at; // centre -> guests so far
  std::vector<std::vector<int>> layers;
  for (std::size_t k = 0; k < local.guests.size(); ++k) {
    int centre = centre_of[local.guests[k].map.front()];
    int j = seen_at[centre]++;
    if (j >= static_cast<int>(layers.size())) layers.resize(j + 1);
    layers[j].push_back(static_cast<int>(k));
  }
  return finalize_cover(local.host, local.guests, local.claims.class_name, layers);
}

// A 1-local cover is already a single layer of disjoint guests.
std::optional<TransformResult> single_layer(const Cover &in, const GuestClass &cls) {
  if (measured_locality(in) != 1) return std::nullopt;
  std::vector<int> all(in.guests.size());
  std::iota(all.begin(), all.end(), 0);
  Cover c = finalize_cover(in.host, in.guests, cls.name, std::vector<std::vector<int>>{all});
  return finish(std::move(c), cls, 1, "s=1");
}

} // namespace

TransformResult union_to_global_compose(const Cover &union_cover, const GuestClass &cls,
                                        const std::vector<Cover> &member_covers) {
  require_valid(union_cover, cls, "union cover");
  if (!measured_injective(union_cover)) throw TransformError("union cover must be injective");
  const auto &host = union_cover.host;
  std::vector<std::vector<int>> layers;
  if (union_cover.claims.layers) {
    layers = *union_cover.claims.layers;
  } else {
    for (std::size_t k = 0; k < union_cover.guests.size(); ++k) layers.push_back({static_cast<int>(k)});
  }
  for (const auto &mc : member_covers) {
    require_valid(mc, cls, "member cover");
    if (!measured_injective(mc)) throw TransformError("member covers must be injective");
  }

  std::vector<CoverGuest> out;
  int widest = 0;
  for (std::size_t L = 0; L < layers.size(); ++L) {
    if (member_covers.empty()) {
      for (int gi : layers[L]) out.push_back(union_cover.guests[gi]);
      widest = std::max(widest, static_cast<int>(layers[L].size()));
      continue;
    }
    // the layer graph J, on the host vertices it touches
    std::vector<int> edge_ids;
    for (int gi : layers[L]) {
      const auto &g = union_cover.guests[gi];
      auto es = image_edges(g.graph, host, g.map);
      edge_ids.insert(edge_ids.end(), es.begin(), es.end());
    }
    std::sort(edge_ids.begin(), edge_ids.end());
    edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()), edge_ids.end());
    Subgraph j = edge_part(host, edge_ids);
    const Cover *match = nullptr;
    std::optional<VertexMap> iso;
    for (const auto &mc : member_covers) {
      Graph core = without_isolated(mc.host);
      if (core.n() != j.graph.n() || core.m() != j.graph.m()) continue;
      std::vector<int> kept;
      without_isolated(mc.host, &kept);
      if (auto f = find_isomorphism(core, j.graph)) {
        // host vertex of mc -> vertex of J
        VertexMap full(mc.host.n(), -1);
        for (std::size_t a = 0; a < kept.size(); ++a) full[kept[a]] = (*f)[a];
        iso = full;
        match = &mc;
        break;
      }
    }
    if (!match) throw TransformError("no member cover for the graph of layer " + std::to_string(L));
    for (const auto &g : match->guests) {
      CoverGuest ng{g.graph, {}};
      bool ok = true;
      for (int x : g.map) {
        ok = ok && (*iso)[x] >= 0;
        if ((*iso)[x] >= 0) ng.map.push_back(j.embedding[(*iso)[x]]);
      }
      if (!ok) throw TransformError("member cover of layer " + std::to_string(L) + " uses isolated vertices");
      out.push_back(std::move(ng));
    }
    widest = std::max(widest, static_cast<int>(match->guests.size()));
  }
  const int t = static_cast<int>(layers.size());
  Cover c = finalize_cover(host, std::move(out), cls.name);
  return finish(std::move(c), cls, t * widest,
                std::to_string(t) + " layers x " + std::to_string(widest) + " guests per layer");
}

TransformResult local_to_union_via_treewidth(const Cover &local_cover, const GuestClass &cls,
                                             const TreeDecomposition &td) {
  if (!cls.flags.component_closed) throw TransformError("class " + cls.name + " is not component-closed");
  require_valid(local_cover, cls, "local cover");
  if (!measured_injective(local_cover)) throw TransformError("local cover must be injective");
  const auto &host = local_cover.host;
  if (auto why = check_tree_decomposition(host, td); !why.empty())
    throw TransformError("invalid tree decomposition: " + why);
  const int s = measured_locality(local_cover);
  const int w = td.width();

  // split guests into connected pieces with edges
  std::vector<CoverGuest> pieces;
  for (const auto &g : local_cover.guests)
    for (const auto &comp : components(g.graph)) {
      if (comp.size() < 2) continue;
      CoverGuest p{induced_subgraph(g.graph, comp), {}};
      for (int x : comp) p.map.push_back(g.map[x]);
      pieces.push_back(std::move(p));
    }
  const int t = static_cast<int>(pieces.size());
  const int nodes = td.tree.n();
  std::vector<Bitset> tv(host.n(), Bitset(nodes));
  for (int b = 0; b < nodes; ++b)
    for (int v : td.bags[b]) tv[v].set(b);
  std::vector<Bitset> ti(t, Bitset(nodes));
  for (int i = 0; i < t; ++i)
    for (int v : pieces[i].map) ti[i] |= tv[v];

  // intersection graph of guest subtrees; chordal, so greedy colouring along
  // a maximum cardinality search order is optimal
  std::vector<std::vector<int>> adj(t);
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (ti[i].intersects(ti[j])) adj[i].push_back(j), adj[j].push_back(i);
  std::vector<int> weight(t, 0), order;
  std::vector<bool> done(t, false);
  for (int step = 0; step < t; ++step) {
    int pick = -1;
    for (int i = 0; i < t; ++i)
      if (!done[i] && (pick < 0 || weight[i] > weight[pick])) pick = i;
    done[pick] = true;
    order.push_back(pick);
    for (int j : adj[pick])
      if (!done[j]) ++weight[j];
  }
  std::vector<int> colour(t, -1);
  int colours = 0;
  for (int i : order) {
    std::vector<bool> used(t + 1, false);
    for (int j : adj[i])
      if (colour[j] >= 0) used[colour[j]] = true;
    int c = 0;
    while (used[c]) ++c;
    colour[i] = c;
    colours = std::max(colours, c + 1);
  }
  std::vector<std::vector<int>> layers(colours);
  for (int i = 0; i < t; ++i) layers[colour[i]].push_back(i);
  // guests sharing a layer must have disjoint images
  for (const auto &l : layers) {
    Bitset seen(host.n());
    for (int i : l)
      for (int v : pieces[i].map) {
        if (seen.test(v)) throw TransformError("layer guests overlap at vertex " + std::to_string(v));
        seen.set(v);
      }
  }
  Cover c = finalize_cover(host, std::move(pieces), cls.name, std::move(layers));
  return finish(std::move(c), cls, (w + 1) * s,
                "(w+1)s with w=" + std::to_string(w) + ", s=" + std::to_string(s));
}

TransformResult folded_to_union_bipartite(const Cover &folded_cover, const GuestClass &cls) {
  if (!cls.flags.hereditary) throw TransformError("class " + cls.name + " is not hereditary");
  const auto &host = folded_cover.host;
  auto side = bipartition(host);
  if (!side) throw TransformError("host is not bipartite");
  require_valid(folded_cover, cls, "folded cover");
  const int s = measured_locality(folded_cover);

  // number the preimages of each host vertex
  std::vector<int> next(host.n(), 0);
  std::vector<std::vector<int>> index(folded_cover.guests.size());
  for (std::size_t k = 0; k < folded_cover.guests.size(); ++k)
    for (int v : folded_cover.guests[k].map) index[k].push_back(next[v]++);

  std::vector<CoverGuest> out;
  std::vector<std::vector<int>> layers;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      std::vector<int> layer;
      for (std::size_t k = 0; k < folded_cover.guests.size(); ++k) {
        const auto &g = folded_cover.guests[k];
        std::vector<int> vs;
        for (int x = 0; x < g.graph.n(); ++x)
          if (index[k][x] == ((*side)[g.map[x]] == 0 ? i : j)) vs.push_back(x);
        std::vector<int> kept;
        Graph piece = without_isolated(induced_subgraph(g.graph, vs), &kept);
        if (piece.m() == 0) continue;
        CoverGuest ng{piece, {}};
        for (int a : kept) ng.map.push_back(g.map[vs[a]]);
        layer.push_back(static_cast<int>(out.size()));
        out.push_back(std::move(ng));
      }
      if (!layer.empty()) layers.push_back(std::move(layer));
    }
  Cover c = finalize_cover(host, std::move(out), cls.name, std::move(layers));
  if (!measured_injective(c)) throw TransformError("bipartite split produced a non-injective guest");
  return finish(std::move(c), cls, s * s, "s^2 with s=" + std::to_string(s));
}

std::vector<Subgraph> decompose_induced_bipartite(const Graph &host) {
  auto chi = chromatic_number(host);
  if (!chi.decided) throw TransformError("chromatic number undecided within budget");
  std::vector<Subgraph> out;
  for (int a = 0; a < chi.value; ++a)
    for (int b = a + 1; b < chi.value; ++b) {
      std::vector<int> vs;
      for (int v = 0; v < host.n(); ++v)
        if (chi.coloring[v] == a || chi.coloring[v] == b) vs.push_back(v);
      Graph g = induced_subgraph(host, vs);
      if (g.m() > 0) out.push_back({g, vs});
    }
  return out;
}

std::vector<Subgraph> decompose_bipartite_log(const Graph &host) {
  auto chi = chromatic_number(host);
  if (!chi.decided) throw TransformError("chromatic number undecided within budget");
  std::vector<Subgraph> out;
  for (int b = 0; b < ceil_log2(chi.value); ++b) {
    std::vector<int> ids;
    for (int id = 0; id < host.m(); ++id) {
      Edge e = host.edge(id);
      if ((chi.coloring[e.u] ^ chi.coloring[e.v]) >> b & 1) ids.push_back(id);
    }
    out.push_back(edge_part(host, ids));
  }
  return out;
}

std::vector<Subgraph> star_forest_decomposition(const Graph &host, const Rational &d) {
  if (mad(host).value > d) throw TransformError("mad of the host exceeds d");
  if (host.m() == 0) return {};
  const int k = floor_of(Rational(2) * d);
  if (k < 1) throw TransformError("d is too small for a host with edges");

  // Edges are placed one by one; a forest stays valid while each component
  // is a star whose leaves are pairwise non-adjacent in the host. Both
  // failures are permanent, so checking the touched component is exact.
  // Edges around high-degree vertices go first.
  std::vector<int> order(host.m());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int id) {
    Edge e = host.edge(id);
    return std::max(host.degree(e.u), host.degree(e.v));
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key(a) > key(b); });

  std::vector<std::vector<std::vector<int>>> adj(k, std::vector<std::vector<int>>(host.n()));
  std::vector<int> forest_of(host.m(), -1);
  int used = 0;
  std::uint64_t nodes = 0;
  const std::uint64_t node_limit = 20'000'000;

  auto component_ok = [&](int f, int start) {
    std::vector<int> comp{start};
    std::vector<bool> seen(host.n(), false);
    seen[start] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int y : adj[f][comp[i]])
        if (!seen[y]) seen[y] = true, comp.push_back(y);
    const int n = static_cast<int>(comp.size());
    if (n <= 2) return true;
    int centre = -1;
    for (int v : comp)
      if (static_cast<int>(adj[f][v].size()) == n - 1) centre = v;
    if (centre < 0) return false;
    for (int a : comp)
      for (int b : comp)
        if (a < b && a != centre && b != centre && host.adjacent(a, b)) return false;
    return true;
  };

  std::function<bool(int)> rec = [&](int pos) -> bool {
    if (pos == host.m()) return true;
    if (++nodes > node_limit) return false;
    const int id = order[pos];
    Edge e = host.edge(id);
    const int top = std::min(used + 1, k);
    for (int f = 0; f < top; ++f) {
      adj[f][e.u].push_back(e.v);
      adj[f][e.v].push_back(e.u);
      bool opened = f == used;
      if (opened) ++used;
      if (component_ok(f, e.u)) {
        forest_of[id] = f;
        if (rec(pos + 1)) return true;
      }
      if (opened) --used;
      adj[f][e.u].pop_back();
      adj[f][e.v].pop_back();
      if (nodes > node_limit) return false;
    }
    return false;
  };
  if (!rec(0)) {
    if (nodes > node_limit) throw TransformError("star forest search ran out of budget");
    throw TransformError("no decomposition into " + std::to_string(k) + " weak induced star forests found");
  }
  std::vector<Subgraph> out;
  for (int f = 0; f < used; ++f) {
    std::vector<int> ids;
    for (int id = 0; id < host.m(); ++id)
      if (forest_of[id] == f) ids.push_back(id);
    auto part = edge_part(host, ids);
    if (!is_star_forest(part.graph) || !is_weak_induced_subgraph(part.graph, host, part.embedding))
      throw TransformError("star forest check failed");
    out.push_back(std::move(part));
  }
  return out;
}

TransformResult folded_to_local_star(const Cover &folded_cover, const GuestClass &cls) {
  if (!cls.flags.hereditary) throw TransformError("class " + cls.name + " is not hereditary");
  const auto &host = folded_cover.host;
  if (!is_star_forest(without_isolated(host))) throw TransformError("host is not a star forest");
  Cover in = without_layers(folded_cover);
  require_valid(in, cls, "folded cover");
  const int s = measured_locality(in);
  auto centre_of = star_centres(host);

  // one preimage edge per host edge, grouped by the guest vertex over the centre
  std::map<std::pair<int, int>, std::vector<int>> stars; // (guest, centre copy) -> leaf host vertices
  for (auto he : host.edges()) {
    int w = centre_of[he.u], u = he.u == w ? he.v : he.u;
    bool found = false;
    for (std::size_t k = 0; k < in.guests.size() && !found; ++k) {
      const auto &g = in.guests[k];
      for (auto ge : g.graph.edges()) {
        int a = g.map[ge.u], b = g.map[ge.v];
        if (a == w && b == u) {
          stars[{static_cast<int>(k), ge.u}].push_back(u);
          found = true;
        } else if (a == u && b == w) {
          stars[{static_cast<int>(k), ge.v}].push_back(u);
          found = true;
        }
        if (found) break;
      }
    }
    if (!found) throw TransformError("host edge without a preimage");
  }
  std::vector<CoverGuest> out;
  for (const auto &[key, leaves] : stars) {
    CoverGuest g{star_graph(static_cast<int>(leaves.size())), {}};
    g.map.push_back(in.guests[key.first].map[key.second]);
    for (int u : leaves) g.map.push_back(u);
    out.push_back(std::move(g));
  }
  Cover c = finalize_cover(host, std::move(out), cls.name);
  auto rep = verify_cover(c, cls);
  if (!rep.valid) throw TransformError("star selection produced an invalid cover: " + rep.first_violation());
  if (!rep.injective || rep.achieved_locality > s)
    throw TransformError("star selection exceeded locality " + std::to_string(s));
  return {std::move(c), s, "locality s=" + std::to_string(s)};
}

TransformResult folded_to_union_sparse(const Cover &folded_cover, const GuestClass &cls) {
  if (!cls.flags.hereditary) throw TransformError("class " + cls.name + " is not hereditary");
  if (!cls.bounds.mad_bound) throw TransformError("class " + cls.name + " has no mad bound");
  Cover in = without_layers(folded_cover);
  require_valid(in, cls, "folded cover");
  const auto &host = in.host;
  const int s = measured_locality(in);
  const Rational d = *cls.bounds.mad_bound;
  const Rational host_mad = mad(host).value;
  // every induced subgraph inherits an s-local cover, so mad(H) <= s d
  if (host_mad > Rational(s) * d) throw TransformError("mad of the host exceeds s*d; the class mad bound is wrong");
  if (auto one = single_layer(in, cls)) return *one;

  Pieces acc;
  auto forests = star_forest_decomposition(host, host_mad);
  for (const auto &f : forests) {
    Cover part = without_layers(restrict_cover(in, cls, f.graph, f.embedding, RestrictMode::weak_induced));
    auto local = folded_to_local_star(part, cls).cover;
    auto layered = star_forest_local_to_union(local, star_centres(f.graph));
    append_lifted(acc, layered, f.embedding);
  }
  Cover c = finalize_cover(host, std::move(acc.guests), cls.name, std::move(acc.layers));
  const int bound = floor_of(Rational(2) * d * Rational(s * s));
  const int tight = static_cast<int>(forests.size()) * s;
  if (measured_globality(c) > tight) throw TransformError("more layers than forests times s");
  return finish(std::move(c), cls, bound,
                "2 d s^2 with d=" + d.str() + ", s=" + std::to_string(s) + " (" +
                    std::to_string(forests.size()) + " star forests)");
}

TransformResult folded_to_union_chromatic(const Cover &folded_cover, const GuestClass &cls) {
  if (!cls.flags.hereditary) throw TransformError("class " + cls.name + " is not hereditary");
  Cover in = without_layers(folded_cover);
  require_valid(in, cls, "folded cover");
  const auto &host = in.host;
  const int s = measured_locality(in);
  if (auto one = single_layer(in, cls)) return *one;
  auto chi = chromatic_number(host);
  if (!chi.decided) throw TransformError("chromatic number undecided within budget");
  const bool mono = cls.flags.monotone;
  auto parts = mono ? decompose_bipartite_log(host) : decompose_induced_bipartite(host);
  Pieces acc;
  for (const auto &p : parts) {
    Cover part = without_layers(
        restrict_cover(in, cls, p.graph, p.embedding, mono ? RestrictMode::subgraph : RestrictMode::induced));
    append_lifted(acc, folded_to_union_bipartite(part, cls).cover, p.embedding);
  }
  Cover c = finalize_cover(host, std::move(acc.guests), cls.name, std::move(acc.layers));
  const int k = chi.value;
  if (mono)
    return finish(std::move(c), cls, ceil_log2(k) * s * s,
                  "ceil(log chi) s^2 with chi=" + std::to_string(k) + ", s=" + std::to_string(s));
  return finish(std::move(c), cls, k * (k - 1) / 2 * s * s,
                "C(chi,2) s^2 <= chi^2 s^2 with chi=" + std::to_string(k) + ", s=" + std::to_string(s));
}

} // namespace gulf
