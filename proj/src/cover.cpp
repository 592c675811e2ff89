#include "gulf/cover.hpp"

#include <algorithm>
#include <map>

namespace gulf {

namespace {

std::string edge_str(int u, int v) { return std::to_string(u) + "-" + std::to_string(v); }

bool map_in_range(const CoverGuest &g, int host_n) {
  if (static_cast<int>(g.map.size()) != g.graph.n()) return false;
  for (int x : g.map)
    if (x < 0 || x >= host_n) return false;
  return true;
}

} // namespace

int measured_locality(const Cover &c) {
  std::vector<int> load(c.host.n(), 0);
  for (const auto &g : c.guests)
    for (int x : g.map)
      if (x >= 0 && x < c.host.n()) ++load[x];
  int s = 0;
  for (int l : load) s = std::max(s, l);
  return s;
}

int measured_globality(const Cover &c) {
  return c.claims.layers ? static_cast<int>(c.claims.layers->size()) : static_cast<int>(c.guests.size());
}

bool measured_injective(const Cover &c) {
  for (const auto &g : c.guests) {
    auto v = image_vertices(g.map);
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) return false;
  }
  return true;
}

CoverReport verify_cover(const Cover &c, const GuestClass &cls) {
  CoverReport r;
  auto fail = [&r](std::string msg) { r.diagnostics.push_back(std::move(msg)); };
  const Graph &h = c.host;

  std::vector<bool> covered(h.m(), false);
  std::vector<int> load(h.n(), 0);
  for (std::size_t i = 0; i < c.guests.size(); ++i) {
    const auto &g = c.guests[i];
    const std::string gi = "guest " + std::to_string(i);
    if (!map_in_range(g, h.n())) {
      fail(gi + ": map has wrong length or leaves the host");
      r.member.push_back(false);
      continue;
    }
    for (auto e : g.graph.edges()) {
      int a = g.map[e.u], b = g.map[e.v];
      int id = h.edge_id(a, b);
      if (id < 0) {
        fail(gi + ": edge not preserved: " + edge_str(e.u, e.v) + " maps to non-edge " + edge_str(a, b));
        continue;
      }
      covered[id] = true;
    }
    auto iv = image_vertices(g.map);
    if (std::adjacent_find(iv.begin(), iv.end()) != iv.end()) r.injective = false;
    for (int x : g.map) ++load[x];
    bool mem = membership(cls, g.graph);
    r.member.push_back(mem);
    if (!mem) fail(gi + ": not a member of class " + cls.name);
  }
  for (int id = 0; id < h.m(); ++id)
    if (!covered[id]) {
      fail("host edge " + edge_str(h.edge(id).u, h.edge(id).v) + " is not covered");
      break;
    }
  for (int l : load) r.achieved_locality = std::max(r.achieved_locality, l);

  if (c.claims.injective && !r.injective) fail("claimed injective but some guest map is not injective");
  if (r.achieved_locality > c.claims.locality) {
    for (int v = 0; v < h.n(); ++v)
      if (load[v] > c.claims.locality) {
        fail("locality " + std::to_string(load[v]) + " at host vertex " + std::to_string(v) + " exceeds claim " +
             std::to_string(c.claims.locality));
        break;
      }
  }

  if (c.claims.layers) {
    const auto &layers = *c.claims.layers;
    std::vector<int> seen(c.guests.size(), 0);
    bool ok = true;
    for (std::size_t L = 0; L < layers.size(); ++L) {
      std::vector<int> owner(h.n(), -1);
      for (int gi : layers[L]) {
        if (gi < 0 || gi >= static_cast<int>(c.guests.size())) {
          fail("layer " + std::to_string(L) + " names unknown guest " + std::to_string(gi));
          ok = false;
          continue;
        }
        ++seen[gi];
        if (!map_in_range(c.guests[gi], h.n())) continue;
        for (int x : image_vertices(c.guests[gi].map)) {
          if (owner[x] >= 0 && owner[x] != gi) {
            fail("layer " + std::to_string(L) + ": guests " + std::to_string(owner[x]) + " and " + std::to_string(gi) +
                 " share host vertex " + std::to_string(x));
            ok = false;
          }
          owner[x] = gi;
        }
      }
    }
    for (std::size_t i = 0; i < seen.size() && ok; ++i)
      if (seen[i] != 1) {
        fail("layers do not partition the guests (guest " + std::to_string(i) + " appears " + std::to_string(seen[i]) +
             " times)");
        ok = false;
      }
    r.achieved_globality = static_cast<int>(layers.size());
  } else {
    r.achieved_globality = static_cast<int>(c.guests.size());
  }
  if (r.achieved_globality > c.claims.globality)
    fail("globality " + std::to_string(r.achieved_globality) + " exceeds claim " + std::to_string(c.claims.globality));

  r.valid = r.diagnostics.empty();
  return r;
}

Cover finalize_cover(Graph host, std::vector<CoverGuest> guests, const std::string &class_name,
                     std::optional<std::vector<std::vector<int>>> layers) {
  Cover c{std::move(host), std::move(guests), {}};
  c.claims.class_name = class_name;
  c.claims.layers = std::move(layers);
  c.claims.injective = measured_injective(c);
  c.claims.locality = measured_locality(c);
  c.claims.globality = measured_globality(c);
  return c;
}

Cover cover_from_candidates(const Graph &host, const std::vector<Candidate> &chosen, const std::string &class_name,
                            std::optional<std::vector<std::vector<int>>> layers) {
  std::vector<CoverGuest> gs;
  for (const auto &cand : chosen) gs.push_back({cand.guest, cand.map});
  return finalize_cover(host, std::move(gs), class_name, std::move(layers));
}

Cover restrict_cover(const Cover &c, const GuestClass &cls, const Graph &sub, const VertexMap &embedding,
                     RestrictMode mode) {
  if (mode == RestrictMode::subgraph && !cls.flags.monotone)
    throw RestrictError("subgraph restriction needs a monotone class; " + cls.name + " is not monotone");
  if (mode != RestrictMode::subgraph && !cls.flags.hereditary)
    throw RestrictError("induced restriction needs a hereditary class; " + cls.name + " is not hereditary");
  if (!is_homomorphism(sub, c.host, embedding)) throw RestrictError("embedding does not preserve edges");
  {
    auto iv = image_vertices(embedding);
    if (std::adjacent_find(iv.begin(), iv.end()) != iv.end()) throw RestrictError("embedding is not injective");
  }
  if (mode == RestrictMode::induced) {
    for (int a = 0; a < sub.n(); ++a)
      for (int b = a + 1; b < sub.n(); ++b)
        if (!sub.adjacent(a, b) && c.host.adjacent(embedding[a], embedding[b]))
          throw RestrictError("subgraph is not induced in the host");
  }
  if (mode == RestrictMode::weak_induced && !is_weak_induced_subgraph(sub, c.host, embedding))
    throw RestrictError("subgraph is not weak induced in the host");

  // host vertex -> (sub vertex, component of sub)
  int ncomp = 0;
  auto comp = component_ids(sub, &ncomp);
  std::vector<int> back(c.host.n(), -1);
  for (int a = 0; a < sub.n(); ++a) back[embedding[a]] = a;

  std::vector<CoverGuest> out;
  std::vector<int> origin; // original guest index per output guest
  for (std::size_t i = 0; i < c.guests.size(); ++i) {
    const auto &g = c.guests[i];
    // keep guest edges whose image is an edge of sub
    std::vector<Edge> kept;
    for (auto e : g.graph.edges()) {
      int a = back[g.map[e.u]], b = back[g.map[e.v]];
      if (a >= 0 && b >= 0 && sub.adjacent(a, b)) kept.push_back(e);
    }
    if (kept.empty()) continue;
    std::vector<int> deg(g.graph.n(), 0);
    for (auto e : kept) ++deg[e.u], ++deg[e.v];
    auto piece_of = [&](int x) { return comp[back[g.map[x]]]; };
    std::vector<std::vector<int>> groups;
    if (mode == RestrictMode::weak_induced) {
      std::map<int, std::vector<int>> by_comp;
      for (int x = 0; x < g.graph.n(); ++x)
        if (deg[x] > 0) by_comp[piece_of(x)].push_back(x);
      for (auto &[k, vs] : by_comp) groups.push_back(vs);
    } else {
      std::vector<int> vs;
      for (int x = 0; x < g.graph.n(); ++x)
        if (deg[x] > 0) vs.push_back(x);
      groups.push_back(vs);
    }
    for (const auto &vs : groups) {
      std::vector<int> pos(g.graph.n(), -1);
      for (std::size_t k = 0; k < vs.size(); ++k) pos[vs[k]] = static_cast<int>(k);
      std::vector<Edge> es;
      for (auto e : kept)
        if (pos[e.u] >= 0 && pos[e.v] >= 0) es.push_back({pos[e.u], pos[e.v]});
      CoverGuest ng{Graph(static_cast<int>(vs.size()), es), {}};
      for (int x : vs) ng.map.push_back(back[g.map[x]]);
      out.push_back(std::move(ng));
      origin.push_back(static_cast<int>(i));
    }
  }

  std::optional<std::vector<std::vector<int>>> layers;
  if (mode == RestrictMode::weak_induced || c.claims.layers) {
    std::vector<std::vector<int>> old_layers;
    if (c.claims.layers) {
      old_layers = *c.claims.layers;
    } else {
      for (std::size_t i = 0; i < c.guests.size(); ++i) old_layers.push_back({static_cast<int>(i)});
    }
    std::vector<int> layer_of(c.guests.size(), -1);
    for (std::size_t L = 0; L < old_layers.size(); ++L)
      for (int gi : old_layers[L]) layer_of[gi] = static_cast<int>(L);
    std::vector<std::vector<int>> nl(old_layers.size());
    for (std::size_t k = 0; k < out.size(); ++k) nl[layer_of[origin[k]]].push_back(static_cast<int>(k));
    layers.emplace();
    for (auto &l : nl)
      if (!l.empty()) layers->push_back(l);
  }
  return finalize_cover(sub, std::move(out), c.claims.class_name, std::move(layers));
}

} // namespace gulf
