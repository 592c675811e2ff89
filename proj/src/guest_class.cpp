#include "gulf/guest_class.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gulf/constructions.hpp"
#include "gulf/io.hpp"
#include "gulf/params.hpp"

namespace gulf {

namespace fs = std::filesystem;

namespace {

struct Indexed {
  Graph g;
  std::uint64_t hash;
};

std::vector<Indexed> index_graphs(const std::vector<Graph> &gs) {
  std::vector<Indexed> out;
  for (const auto &g : gs) out.push_back({g, invariant_hash(g)});
  return out;
}

bool in_list(const std::vector<Indexed> &list, const Graph &g) {
  std::uint64_t h = 0;
  bool hashed = false;
  for (const auto &m : list) {
    if (m.g.n() != g.n() || m.g.m() != g.m()) continue;
    if (!hashed) h = invariant_hash(g), hashed = true;
    if (m.hash == h && are_isomorphic(m.g, g)) return true;
  }
  return false;
}

void check_limit(std::size_t count) {
  if (count > candidate_limit)
    throw EnumerationLimit("more than " + std::to_string(candidate_limit) + " candidate guests");
}

Graph delete_vertex(const Graph &g, int v) {
  std::vector<int> keep;
  for (int x = 0; x < g.n(); ++x)
    if (x != v) keep.push_back(x);
  return induced_subgraph(g, keep);
}

Graph delete_edge(const Graph &g, int id) {
  std::vector<Edge> es;
  for (int k = 0; k < g.m(); ++k)
    if (k != id) es.push_back(g.edge(k));
  return Graph(g.n(), es);
}

// Components of g grouped by isomorphism type: representative + multiplicity.
struct ComponentTypes {
  std::vector<Graph> reps;
  std::vector<int> count;
};

ComponentTypes component_types(const Graph &g) {
  ComponentTypes t;
  for (auto &c : component_graphs(g)) {
    bool found = false;
    for (std::size_t k = 0; k < t.reps.size(); ++k)
      if (are_isomorphic(t.reps[k], c)) {
        ++t.count[k];
        found = true;
        break;
      }
    if (!found) {
      t.reps.push_back(std::move(c));
      t.count.push_back(1);
    }
  }
  return t;
}

// Is `target` a sum of (repeatable) vectors from `parts`?
bool decomposes(std::vector<int> &target, const std::vector<std::vector<int>> &parts,
                std::set<std::vector<int>> &failed) {
  auto first = std::find_if(target.begin(), target.end(), [](int x) { return x > 0; });
  if (first == target.end()) return true;
  if (failed.count(target)) return false;
  std::size_t k = first - target.begin();
  for (const auto &p : parts) {
    if (p[k] == 0) continue;
    bool fits = true;
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p[j] > target[j]) fits = false;
    if (!fits) continue;
    for (std::size_t j = 0; j < p.size(); ++j) target[j] -= p[j];
    bool ok = decomposes(target, parts, failed);
    for (std::size_t j = 0; j < p.size(); ++j) target[j] += p[j];
    if (ok) return true;
  }
  failed.insert(target);
  return false;
}

// Member copies of each pattern, as candidates.
std::vector<Candidate> copies_of(const std::vector<Graph> &patterns, const Graph &host) {
  std::vector<Candidate> out;
  for (const auto &p : patterns) {
    if (p.m() == 0) continue;
    auto maps = enumerate_copies(p, host, CopyMode::subgraph, candidate_limit + 1 - out.size());
    for (auto &m : maps) out.push_back({p, std::move(m)});
    check_limit(out.size());
  }
  return out;
}

std::vector<Candidate> star_candidates(const Graph &host) {
  std::vector<Candidate> out;
  for (int c = 0; c < host.n(); ++c) {
    const auto &nb = host.neighbors(c);
    const int d = static_cast<int>(nb.size());
    if (d == 0) continue;
    if (d >= 30) throw EnumerationLimit("star enumeration: degree too large");
    for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
      std::vector<int> leaves;
      for (int k = 0; k < d; ++k)
        if (mask >> k & 1) leaves.push_back(nb[k]);
      // K_{1,1} has two centres; keep the one at the smaller end
      if (leaves.size() == 1 && leaves[0] < c) continue;
      VertexMap map{c};
      map.insert(map.end(), leaves.begin(), leaves.end());
      out.push_back({star_graph(static_cast<int>(leaves.size())), std::move(map)});
      check_limit(out.size());
    }
  }
  return out;
}

std::vector<Candidate> clique_candidates(const Graph &host) {
  std::vector<Candidate> out;
  std::vector<int> cur;
  auto rec = [&](auto &&self, Bitset cand) -> void {
    if (cur.size() >= 2) {
      out.push_back({complete_graph(static_cast<int>(cur.size())), cur});
      check_limit(out.size());
    }
    cand.for_each([&](int v) {
      Bitset next = cand;
      next &= host.adjacency(v);
      // only larger vertices, so each clique appears once
      for (int x = 0; x <= v; ++x) next.reset(x);
      cur.push_back(v);
      self(self, next);
      cur.pop_back();
    });
  };
  for (int v = 0; v < host.n(); ++v) {
    Bitset next = host.adjacency(v);
    for (int x = 0; x <= v; ++x) next.reset(x);
    cur = {v};
    rec(rec, next);
  }
  return out;
}

// Guests on disjoint (X, Y) carrying every host edge between X and Y; every
// vertex has a neighbour on the other side.
std::vector<Candidate> bipartite_candidates(const Graph &host) {
  const int n = host.n();
  if (n > 16) throw EnumerationLimit("bipartite enumeration: host has more than 16 vertices");
  std::vector<Candidate> out;
  std::vector<int> side(n, 0); // 0 unused, 1 X, 2 Y
  auto emit = [&] {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (side[v]) vs.push_back(v);
    std::vector<int> pos(n, -1);
    for (std::size_t k = 0; k < vs.size(); ++k) pos[vs[k]] = static_cast<int>(k);
    std::vector<Edge> es;
    std::vector<bool> touched(vs.size(), false);
    for (auto e : host.edges())
      if (side[e.u] && side[e.v] && side[e.u] != side[e.v]) {
        es.push_back({pos[e.u], pos[e.v]});
        touched[pos[e.u]] = touched[pos[e.v]] = true;
      }
    if (es.empty() || std::find(touched.begin(), touched.end(), false) != touched.end()) return;
    out.push_back({Graph(static_cast<int>(vs.size()), es), vs});
    check_limit(out.size());
  };
  // the first used vertex goes to X, which removes the X/Y swap
  auto rec = [&](auto &&self, int v, bool any) -> void {
    if (v == n) {
      if (any) emit();
      return;
    }
    side[v] = 0;
    self(self, v + 1, any);
    side[v] = 1;
    self(self, v + 1, true);
    if (any) {
      side[v] = 2;
      self(self, v + 1, true);
    }
    side[v] = 0;
  };
  rec(rec, 0, false);
  return out;
}

std::vector<Candidate> biclique_candidates(const Graph &host) {
  std::vector<Candidate> out;
  const int n = host.n();
  if (n > 16) throw EnumerationLimit("complete-bipartite enumeration: host has more than 16 vertices");
  // X is chosen as a vertex set, Y ranges over nonempty subsets of the common
  // neighbourhood of X; unordered pairs kept once via min(X) < min(Y).
  std::vector<int> xs;
  auto rec_x = [&](auto &&self, int from, Bitset common) -> void {
    if (!xs.empty()) {
      std::vector<int> cn;
      common.for_each([&](int y) {
        if (y > xs.front()) cn.push_back(y);
      });
      const int k = static_cast<int>(cn.size());
      for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> ys;
        for (int b = 0; b < k; ++b)
          if (mask >> b & 1) ys.push_back(cn[b]);
        VertexMap map = xs;
        map.insert(map.end(), ys.begin(), ys.end());
        out.push_back({complete_bipartite(static_cast<int>(xs.size()), static_cast<int>(ys.size())), map});
        check_limit(out.size());
      }
    }
    for (int v = from; v < n; ++v) {
      Bitset next = xs.empty() ? host.adjacency(v) : common;
      if (!xs.empty()) next &= host.adjacency(v);
      if (next.none()) continue;
      xs.push_back(v);
      self(self, v + 1, next);
      xs.pop_back();
    }
  };
  rec_x(rec_x, 0, Bitset(n));
  return out;
}

std::vector<Candidate> hairy_candidates(const Graph &host) {
  std::vector<Candidate> out;
  for (auto e : host.edges()) out.push_back({complete_graph(2), {e.u, e.v}});
  for (int len = 3; len <= host.n(); ++len) {
    Graph cyc = cycle_graph(len);
    for (const auto &cm : enumerate_copies(cyc, host, CopyMode::subgraph, candidate_limit + 1)) {
      std::vector<bool> on(host.n(), false);
      for (int v : cm) on[v] = true;
      // outside vertices adjacent to the cycle; each becomes a pendant at one
      // of its cycle neighbours or stays out
      std::vector<int> outside;
      for (int v = 0; v < host.n(); ++v) {
        if (on[v]) continue;
        for (int x : cm)
          if (host.adjacent(v, x)) {
            outside.push_back(v);
            break;
          }
      }
      std::vector<int> attach(outside.size(), -1);
      auto rec = [&](auto &&self, std::size_t k) -> void {
        if (k == outside.size()) {
          GraphBuilder b;
          for (int i = 0; i < len; ++i) b.add_vertex();
          for (int i = 0; i < len; ++i) b.add_edge(i, (i + 1) % len);
          VertexMap map = cm;
          for (std::size_t j = 0; j < outside.size(); ++j)
            if (attach[j] >= 0) {
              b.add_edge(attach[j], b.add_vertex());
              map.push_back(outside[j]);
            }
          out.push_back({b.build(), map});
          check_limit(out.size());
          return;
        }
        attach[k] = -1;
        self(self, k + 1);
        for (int i = 0; i < len; ++i)
          if (host.adjacent(outside[k], cm[i])) {
            attach[k] = i;
            self(self, k + 1);
          }
        attach[k] = -1;
      };
      rec(rec, 0);
    }
  }
  return out;
}

bool is_caterpillar(const Graph &g) {
  if (!is_forest(g) || !is_connected(g)) return false;
  std::vector<int> spine;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) >= 2) spine.push_back(v);
  Graph s = induced_subgraph(g, spine);
  for (int v = 0; v < s.n(); ++v)
    if (s.degree(v) > 2) return false;
  return true;
}

// Number of vertices of G_i^t, or -1.
int tw_parameter(int n) {
  for (int t = 4; (t - 1) * (4 * t + 2) <= n; ++t)
    if ((t - 1) * (4 * t + 2) == n) return t;
  return -1;
}

bool tw_sep_member(const Graph &g) {
  if (g.n() == 2 && g.m() == 1) return true;
  int t = tw_parameter(g.n());
  if (t < 0 || g.m() != (t - 1) * (4 * t + 1)) return false;
  for (int i = 1; i <= t; ++i)
    if (are_isomorphic(g, tw_guest(t, i))) return true;
  return false;
}

bool tw_sep_union_member(const Graph &g) {
  // components are K2 or some hat graph; hat graphs of one index come in
  // multiples of t-1
  std::map<std::pair<int, int>, int> hats;
  for (const auto &c : component_graphs(g)) {
    if (c.n() == 2 && c.m() == 1) continue;
    if ((c.n() - 2) % 4 != 0 || c.n() < 18) return false;
    int t = (c.n() - 2) / 4;
    bool found = false;
    for (int i = 1; i <= t && !found; ++i)
      if (are_isomorphic(c, tw_hat_guest(t, i))) {
        ++hats[{t, i}];
        found = true;
      }
    if (!found) return false;
  }
  for (auto [ti, k] : hats)
    if (k % (ti.first - 1) != 0) return false;
  return true;
}

bool grid_sep_member(const Graph &g) {
  if (g.n() == 2 && g.m() == 1) return true;
  if (g.n() < 20 || g.n() % 4 != 0) return false;
  int l = g.n() / 4 - 1;
  if (g.m() != g.n() + 1) return false;
  for (int i = 1; i <= l; ++i)
    if (are_isomorphic(g, grid_guest(l, i))) return true;
  return false;
}

GuestClass finite_named(const std::string &name, const std::string &description, std::vector<Graph> graphs,
                        ClassBounds bounds) {
  GuestClass c = make_finite_class(name, std::move(graphs));
  c.description = description;
  c.bounds = std::move(bounds);
  return c;
}

GuestClass builtin(const std::string &name) {
  auto set_flags = [](GuestClass &c, bool h, bool m, bool cc, bool u) { c.flags = {h, m, cc, u}; };
  auto two = [](int chi) { return ClassBounds{Rational(2), chi, ""}; };
  if (name == "k2-only") {
    auto c = finite_named(name, "the single graph K2", {complete_graph(2)}, {Rational(1), 2, "K2 has one edge"});
    return c;
  }
  if (name == "triangles")
    return finite_named(name, "K3 and K2", {complete_graph(3), complete_graph(2)},
                        {Rational(2), 3, "K3 has average degree 2"});
  GuestClass c;
  c.name = name;
  c.kind = GuestClass::Kind::named;
  if (name == "stars") {
    c.description = "stars K_{1,n}, n >= 1";
    set_flags(c, false, false, true, false);
    c.predicate = [](const Graph &g) { return is_star(g); };
    c.enumerator = star_candidates;
    c.extendable = [](const Graph &g) { return g.n() == 1 || is_star(g); };
    c.folds_to_injective = true;
    c.bounds = two(2);
    c.bounds.justification = "stars are trees";
  } else if (name == "star-forests") {
    c.description = "forests whose components are stars or isolated vertices";
    set_flags(c, true, true, true, true);
    c.predicate = [](const Graph &g) { return is_star_forest(g); };
    c.bounds = two(2);
    c.bounds.justification = "forests have average degree below 2";
  } else if (name == "forests") {
    c.description = "acyclic graphs";
    set_flags(c, true, true, true, true);
    c.predicate = [](const Graph &g) { return is_forest(g); };
    c.bounds = two(2);
    c.bounds.justification = "forests have average degree below 2";
  } else if (name == "linear-forests") {
    c.description = "disjoint unions of paths";
    set_flags(c, true, true, true, true);
    c.predicate = [](const Graph &g) { return is_linear_forest(g); };
    c.bounds = two(2);
    c.bounds.justification = "paths have average degree below 2";
  } else if (name == "bipartite") {
    c.description = "bipartite graphs";
    set_flags(c, true, true, true, true);
    c.predicate = [](const Graph &g) { return bipartition(g).has_value(); };
    c.enumerator = bipartite_candidates;
    c.bounds.chi_bound = 2;
    c.bounds.justification = "two colour classes";
  } else if (name == "complete-bipartite") {
    c.description = "complete bipartite graphs K_{a,b}, a, b >= 1";
    set_flags(c, false, false, true, false);
    c.predicate = [](const Graph &g) { return is_complete_bipartite(g); };
    c.enumerator = biclique_candidates;
    c.extendable = [](const Graph &g) { return g.n() == 1 || bipartition(g).has_value(); };
    c.bounds.chi_bound = 2;
    c.bounds.justification = "two colour classes";
  } else if (name == "hairy-cycles+K2") {
    c.description = "K2 and cycles with any number of pendant vertices";
    set_flags(c, false, false, true, false);
    c.predicate = [](const Graph &g) { return (g.n() == 2 && g.m() == 1) || is_hairy_cycle(g); };
    c.enumerator = hairy_candidates;
    c.extendable = [](const Graph &g) { return g.n() == 1 || is_hairy_cycle(g) || is_caterpillar(g); };
    c.bounds = two(3);
    c.bounds.justification = "one cycle per component gives m = n";
  } else if (name == "forb-c4") {
    c.description = "graphs without a 4-cycle subgraph";
    set_flags(c, true, true, true, true);
    c.predicate = [](const Graph &g) { return !contains_c4(g); };
  } else if (name == "complete-graphs") {
    c.description = "complete graphs K_n, n >= 1";
    set_flags(c, true, false, true, false);
    c.predicate = [](const Graph &g) { return g.n() >= 1 && is_complete(g); };
    c.enumerator = clique_candidates;
    c.extendable = [](const Graph &g) { return is_complete(g); };
    c.folds_to_injective = true;
  } else if (name == "tw-sep") {
    c.description = "K2 and the graphs G_i^t, t >= 4, i in [t]";
    set_flags(c, false, false, false, false);
    c.predicate = tw_sep_member;
    c.union_predicate = tw_sep_union_member;
    c.bounds = two(2);
    c.bounds.justification = "every member is a forest";
  } else if (name == "grid-sep") {
    c.description = "K2 and the graphs G_i^l, l >= 4, i in [l]";
    set_flags(c, false, false, true, false);
    c.predicate = grid_sep_member;
    c.bounds.chi_bound = 3;
    c.bounds.justification = "odd cycles and a triangle, otherwise a tree";
  } else {
    throw std::invalid_argument("unknown guest class: " + name);
  }
  return c;
}

const std::vector<std::string> &builtin_names() {
  static const std::vector<std::string> names{"k2-only",        "triangles", "stars",      "star-forests",
                                              "forests",        "linear-forests", "bipartite", "complete-bipartite",
                                              "hairy-cycles+K2", "forb-c4",   "complete-graphs", "tw-sep",
                                              "grid-sep"};
  return names;
}

} // namespace

bool membership(const GuestClass &c, const Graph &g) { return c.predicate && c.predicate(g); }

bool union_closure_membership(const GuestClass &c, const Graph &g) {
  if (c.union_predicate) return c.union_predicate(g);
  if (g.n() == 0) return true;
  if (c.flags.union_closed) return membership(c, g);
  if (c.flags.component_closed) {
    for (const auto &comp : component_graphs(g))
      if (!membership(c, comp)) return false;
    return true;
  }
  if (c.kind != GuestClass::Kind::finite_list) return membership(c, g);
  auto types = component_types(g);
  std::vector<std::vector<int>> parts;
  for (const auto &m : c.members) {
    if (m.n() == 0) continue;
    auto mt = component_types(m);
    std::vector<int> vec(types.reps.size(), 0);
    bool usable = true;
    for (std::size_t k = 0; k < mt.reps.size() && usable; ++k) {
      bool found = false;
      for (std::size_t j = 0; j < types.reps.size(); ++j)
        if (are_isomorphic(mt.reps[k], types.reps[j])) {
          vec[j] += mt.count[k];
          found = true;
          break;
        }
      usable = found;
    }
    if (usable) parts.push_back(vec);
  }
  std::set<std::vector<int>> failed;
  return decomposes(types.count, parts, failed);
}

bool could_extend(const GuestClass &c, const Graph &part) {
  if (c.extendable) return c.extendable(part);
  if (c.flags.monotone) return membership(c, part);
  if (c.kind == GuestClass::Kind::finite_list) {
    for (const auto &m : c.members)
      if (m.n() >= part.n() && m.m() >= part.m() && has_copy(part, m)) return true;
    return false;
  }
  return true;
}

GuestClass make_finite_class(const std::string &name, std::vector<Graph> graphs) {
  GuestClass c;
  c.name = name;
  c.kind = GuestClass::Kind::finite_list;
  // drop duplicates up to isomorphism, keep order of first appearance
  std::vector<Graph> uniq;
  for (auto &g : graphs) {
    bool dup = false;
    for (const auto &u : uniq)
      if (are_isomorphic(u, g)) dup = true;
    if (!dup) uniq.push_back(std::move(g));
  }
  c.members = uniq;
  auto idx = std::make_shared<std::vector<Indexed>>(index_graphs(uniq));
  c.predicate = [idx](const Graph &g) { return in_list(*idx, g); };
  c.enumerator = [members = uniq](const Graph &host) { return copies_of(members, host); };

  auto contains = [&](const Graph &g) { return g.n() == 0 || in_list(*idx, g); };
  bool cc = true, her = true, mono = true;
  for (const auto &m : uniq) {
    for (const auto &comp : component_graphs(m))
      if (!contains(comp)) cc = false;
    for (int v = 0; v < m.n(); ++v)
      if (!contains(delete_vertex(m, v))) her = false;
    for (int e = 0; e < m.m(); ++e)
      if (!contains(delete_edge(m, e))) mono = false;
  }
  mono = mono && her;
  c.flags = {her, mono, cc, uniq.empty()};

  bool fold = cc;
  for (const auto &m : uniq)
    for (const auto &comp : component_graphs(m)) {
      if (is_complete(comp)) continue;
      if (!is_star(comp)) {
        fold = false;
        continue;
      }
      for (int k = 1; k < comp.n() - 1; ++k)
        if (!contains(star_graph(k))) fold = false;
    }
  c.folds_to_injective = fold;
  return c;
}

std::string validate_class(const GuestClass &c) {
  if (c.flags.monotone && !c.flags.hereditary) return "monotone class must be hereditary";
  if (c.flags.hereditary && !c.flags.component_closed) return "hereditary class must be component-closed";
  if (!membership(c, complete_graph(2))) return "class must contain K2";
  if (c.kind == GuestClass::Kind::finite_list) {
    GuestClass inferred = make_finite_class(c.name, c.members);
    auto bad = [](bool declared, bool actual) { return declared && !actual; };
    if (bad(c.flags.hereditary, inferred.flags.hereditary)) return "declared hereditary but the list is not";
    if (bad(c.flags.monotone, inferred.flags.monotone)) return "declared monotone but the list is not";
    if (bad(c.flags.component_closed, inferred.flags.component_closed))
      return "declared component-closed but the list is not";
    if (bad(c.flags.union_closed, inferred.flags.union_closed)) return "declared union-closed but the list is not";
    // bounds are checked on every member (lists are far below 1000 graphs)
    for (const auto &m : c.members) {
      if (c.bounds.mad_bound && mad(m).value > *c.bounds.mad_bound)
        return "member " + to_graph6(m) + " exceeds the declared mad bound";
      if (c.bounds.chi_bound) {
        auto chi = chromatic_number(m);
        if (chi.lower > *c.bounds.chi_bound) return "member " + to_graph6(m) + " exceeds the declared chi bound";
      }
    }
  }
  return {};
}

std::vector<std::string> registered_names(const std::string &class_dir) {
  std::vector<std::string> names = builtin_names();
  if (!class_dir.empty() && fs::is_directory(class_dir)) {
    std::vector<std::string> extra;
    for (const auto &entry : fs::directory_iterator(class_dir))
      if (entry.is_directory() && fs::exists(entry.path() / "manifest.json"))
        extra.push_back(entry.path().filename().string());
    std::sort(extra.begin(), extra.end());
    names.insert(names.end(), extra.begin(), extra.end());
  }
  return names;
}

GuestClass registry_lookup(const std::string &name, const std::string &class_dir) {
  const auto &b = builtin_names();
  if (std::find(b.begin(), b.end(), name) != b.end()) return builtin(name);
  if (!class_dir.empty()) {
    fs::path p = fs::path(class_dir) / name;
    if (fs::exists(p / "manifest.json")) return load_finite_class(p.string());
  }
  throw std::invalid_argument("unknown guest class: " + name);
}

GuestClass load_finite_class(const std::string &dir) {
  fs::path root(dir);
  nlohmann::json man;
  try {
    man = nlohmann::json::parse(read_text_file((root / "manifest.json").string()));
  } catch (const nlohmann::json::exception &e) {
    throw ParseError("manifest.json: " + std::string(e.what()));
  }
  std::vector<std::string> files;
  if (man.contains("graphs")) {
    files = man["graphs"].get<std::vector<std::string>>();
  } else {
    for (const auto &entry : fs::directory_iterator(root))
      if (entry.path().extension() == ".g6") files.push_back(entry.path().filename().string());
    std::sort(files.begin(), files.end());
  }
  std::vector<Graph> graphs;
  for (const auto &f : files) {
    std::istringstream in(read_text_file((root / f).string()));
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      graphs.push_back(parse_graph6(line));
    }
  }
  std::string name = man.value("name", root.filename().string());
  GuestClass c = make_finite_class(name, std::move(graphs));
  c.description = man.value("description", std::string{});
  if (man.contains("flags")) {
    const auto &fl = man["flags"];
    c.flags.hereditary = fl.value("hereditary", false);
    c.flags.monotone = fl.value("monotone", false);
    c.flags.component_closed = fl.value("component_closed", false);
    c.flags.union_closed = fl.value("union_closed", false);
  }
  if (man.contains("bounds")) {
    const auto &bd = man["bounds"];
    if (bd.contains("mad") && !bd["mad"].is_null()) {
      const auto &m = bd["mad"];
      if (m.is_array())
        c.bounds.mad_bound = Rational(m.at(0).get<std::int64_t>(), m.at(1).get<std::int64_t>());
      else
        c.bounds.mad_bound = Rational(m.get<std::int64_t>());
    }
    if (bd.contains("chi") && !bd["chi"].is_null()) c.bounds.chi_bound = bd["chi"].get<int>();
    c.bounds.justification = bd.value("justification", std::string{});
  }
  std::string err = validate_class(c);
  if (!err.empty()) throw std::invalid_argument("class " + name + ": " + err);
  return c;
}

void save_finite_class(const GuestClass &c, const std::string &dir) {
  if (c.kind != GuestClass::Kind::finite_list) throw std::invalid_argument("only finite lists can be saved");
  fs::create_directories(dir);
  std::string body;
  for (const auto &m : c.members) body += to_graph6(m) + "\n";
  write_text_file((fs::path(dir) / "members.g6").string(), body);
  nlohmann::ordered_json man;
  man["name"] = c.name;
  man["description"] = c.description;
  man["graphs"] = {"members.g6"};
  man["flags"] = {{"hereditary", c.flags.hereditary},
                  {"monotone", c.flags.monotone},
                  {"component_closed", c.flags.component_closed},
                  {"union_closed", c.flags.union_closed}};
  nlohmann::ordered_json bounds;
  if (c.bounds.mad_bound)
    bounds["mad"] = {c.bounds.mad_bound->num(), c.bounds.mad_bound->den()};
  else
    bounds["mad"] = nullptr;
  if (c.bounds.chi_bound)
    bounds["chi"] = *c.bounds.chi_bound;
  else
    bounds["chi"] = nullptr;
  bounds["justification"] = c.bounds.justification;
  man["bounds"] = bounds;
  write_text_file((fs::path(dir) / "manifest.json").string(), man.dump(2) + "\n");
}

} // namespace gulf
