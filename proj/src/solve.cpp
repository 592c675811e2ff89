#include "gulf/solve.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "gulf/io.hpp"
#include "gulf/params.hpp"

namespace gulf {

namespace {

using Clock = std::chrono::steady_clock;

struct Meter {
  std::uint64_t node_limit;
  double time_limit;
  Clock::time_point start = Clock::now();
  std::uint64_t nodes = 0;
  bool exhausted = false;

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
  // False once the budget is gone.
  bool tick() {
    if (exhausted) return false;
    ++nodes;
    if (nodes > node_limit || ((nodes & 1023) == 0 && elapsed() > time_limit)) exhausted = true;
    return !exhausted;
  }
};

enum class Outcome { found, infeasible, exhausted };

// Graph on the endpoints of the given host edges, plus the vertex map.
Graph edges_graph(const Graph &host, const std::vector<int> &edge_ids, VertexMap *map) {
  std::vector<int> pos(host.n(), -1);
  VertexMap vs;
  std::vector<Edge> es;
  for (int id : edge_ids) {
    Edge e = host.edge(id);
    for (int x : {e.u, e.v})
      if (pos[x] < 0) {
        pos[x] = static_cast<int>(vs.size());
        vs.push_back(x);
      }
    es.push_back(make_edge(pos[e.u], pos[e.v]));
  }
  if (map) *map = vs;
  return Graph(static_cast<int>(vs.size()), es);
}

// Components of g grouped into members of the class; nullopt if impossible.
std::optional<std::vector<std::vector<int>>> closure_grouping(const GuestClass &cls, const Graph &g) {
  auto comps = components(g);
  const int k = static_cast<int>(comps.size());
  if (k == 0) return std::vector<std::vector<int>>{};
  if (membership(cls, g)) {
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    return std::vector<std::vector<int>>{all};
  }
  if (cls.flags.component_closed) {
    for (const auto &c : comps)
      if (!membership(cls, induced_subgraph(g, c))) return std::nullopt;
    return comps;
  }
  if (k > 16) return std::nullopt;
  // exact cover of the components by member groups, smallest component first
  std::vector<int> group_of(k, -1);
  std::vector<std::vector<int>> groups;
  std::set<std::uint32_t> failed;
  std::function<bool(std::uint32_t)> rec = [&](std::uint32_t used) -> bool {
    if (used == (1u << k) - 1) return true;
    if (failed.count(used)) return false;
    int first = 0;
    while (used >> first & 1) ++first;
    std::uint32_t rest = ((1u << k) - 1) & ~used & ~(1u << first);
    // subsets of the remaining components joined with `first`
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      std::uint32_t grp = sub | (1u << first);
      std::vector<int> vs;
      for (int j = 0; j < k; ++j)
        if (grp >> j & 1) vs.insert(vs.end(), comps[j].begin(), comps[j].end());
      std::sort(vs.begin(), vs.end());
      if (membership(cls, induced_subgraph(g, vs))) {
        groups.push_back(vs);
        if (rec(used | grp)) return true;
        groups.pop_back();
      }
      if (sub == 0) break;
    }
    failed.insert(used);
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return groups;
}

std::vector<int> colex_edge_order(const Graph &host) {
  std::vector<int> order(host.m());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    Edge x = host.edge(a), y = host.edge(b);
    return std::pair(x.v, x.u) < std::pair(y.v, y.u);
  });
  return order;
}

// Largest d <= limit with K_{1,d} in the class; for monotone classes this
// bounds every member's maximum degree.
int star_degree_bound(const GuestClass &cls, int limit) {
  int d = 1;
  while (d < limit && membership(cls, star_graph(d + 1))) ++d;
  return d;
}

// ---------------------------------------------------------------------------
// Candidate engines (injective variants, classes with an enumerator)

struct Cand {
  Candidate c;
  Bitset verts, edges;
  int ne = 0, nv = 0;
};

struct CandidateSet {
  const Graph *host = nullptr;
  std::vector<Cand> cands;
  std::vector<std::vector<int>> by_edge; // candidate indices covering each edge
  std::vector<int> max_deg;              // per host vertex, max degree inside a candidate
  int max_edges = 0;
  // densest subgraph ratio over candidates, as a fraction
  std::int64_t rho_num = 0, rho_den = 1;

  std::int64_t cap(std::int64_t units) const { return units * rho_num / rho_den; }
};

CandidateSet build_candidates(const Graph &host, std::vector<Candidate> raw, Variant variant) {
  CandidateSet cs;
  cs.host = &host;
  std::vector<Cand> all;
  for (auto &c : raw) {
    Cand x;
    x.verts = Bitset(host.n());
    x.edges = Bitset(host.m());
    for (int v : c.map) x.verts.set(v);
    for (int id : image_edges(c.guest, host, c.map)) x.edges.set(id);
    x.ne = static_cast<int>(x.edges.count());
    x.nv = static_cast<int>(x.verts.count());
    if (x.ne == 0) continue;
    x.c = std::move(c);
    all.push_back(std::move(x));
  }
  // dominance: for global only the edge set matters; otherwise the vertex set
  // must match too
  std::vector<bool> drop(all.size(), false);
  if (all.size() <= 6000) {
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = 0; b < all.size() && !drop[a]; ++b) {
        if (a == b || drop[b]) continue;
        if (!all[a].edges.subset_of(all[b].edges)) continue;
        if (variant != Variant::global && !(all[a].verts == all[b].verts)) continue;
        bool strict = all[a].ne < all[b].ne || (variant == Variant::global && all[a].nv > all[b].nv);
        if (strict || b < a) drop[a] = true;
      }
  }
  for (std::size_t a = 0; a < all.size(); ++a)
    if (!drop[a]) cs.cands.push_back(std::move(all[a]));
  std::stable_sort(cs.cands.begin(), cs.cands.end(), [](const Cand &a, const Cand &b) { return a.ne > b.ne; });

  cs.by_edge.assign(host.m(), {});
  cs.max_deg.assign(host.n(), 0);
  std::map<std::string, Rational> dens;
  Rational rho(0);
  for (int i = 0; i < static_cast<int>(cs.cands.size()); ++i) {
    const auto &c = cs.cands[i];
    c.edges.for_each([&](int id) { cs.by_edge[id].push_back(i); });
    for (int x = 0; x < c.c.guest.n(); ++x)
      cs.max_deg[c.c.map[x]] = std::max(cs.max_deg[c.c.map[x]], c.c.guest.degree(x));
    cs.max_edges = std::max(cs.max_edges, c.ne);
    std::string key = to_graph6(c.c.guest);
    auto it = dens.find(key);
    if (it == dens.end()) it = dens.emplace(key, mad(c.c.guest).value / Rational(2)).first;
    rho = std::max(rho, it->second);
  }
  cs.rho_num = rho.num();
  cs.rho_den = rho.den();
  return cs;
}

class CandidateSearch {
public:
  CandidateSearch(const CandidateSet &cs, Variant variant, Meter &meter)
      : cs_(cs), h_(*cs.host), variant_(variant), meter_(meter) {}

  Outcome run(int k, Cover *out) {
    k_ = k;
    covered_ = Bitset(h_.m());
    rem_.assign(h_.n(), 0);
    for (int v = 0; v < h_.n(); ++v) rem_[v] = h_.degree(v);
    uncovered_ = h_.m();
    load_.assign(h_.n(), 0);
    occ_.assign(k, Bitset(h_.n()));
    layer_of_.clear();
    chosen_.clear();
    used_layers_ = 0;
    bool ok = dfs();
    if (ok) {
      std::vector<Candidate> picked;
      for (int i : chosen_) picked.push_back(cs_.cands[i].c);
      std::optional<std::vector<std::vector<int>>> layers;
      if (variant_ == Variant::union_) {
        layers.emplace(used_layers_);
        for (std::size_t j = 0; j < chosen_.size(); ++j) (*layers)[layer_of_[j]].push_back(static_cast<int>(j));
      }
      *out = cover_from_candidates(h_, picked, "", layers);
      return Outcome::found;
    }
    return meter_.exhausted ? Outcome::exhausted : Outcome::infeasible;
  }

private:
  const CandidateSet &cs_;
  const Graph &h_;
  Variant variant_;
  Meter &meter_;
  int k_ = 0;
  Bitset covered_;
  std::vector<int> rem_, load_;
  int uncovered_ = 0;
  std::vector<Bitset> occ_;
  std::vector<int> layer_of_, chosen_;
  int used_layers_ = 0;

  bool fits(const Cand &c, int layer) const {
    if (variant_ == Variant::union_) return !occ_[layer].intersects(c.verts);
    if (variant_ == Variant::local) {
      bool ok = true;
      c.verts.for_each([&](int v) { ok = ok && load_[v] < k_; });
      return ok;
    }
    return true;
  }

  bool bounded() const {
    if (variant_ == Variant::global) {
      return uncovered_ <= static_cast<long>(k_ - chosen_.size()) * cs_.max_edges;
    }
    std::int64_t units = 0;
    for (int v = 0; v < h_.n(); ++v) {
      if (rem_[v] == 0) continue;
      int free;
      if (variant_ == Variant::local) {
        free = k_ - load_[v];
      } else {
        free = k_;
        for (int L = 0; L < used_layers_; ++L)
          if (occ_[L].test(v)) --free;
      }
      if (rem_[v] > free * cs_.max_deg[v]) return false;
      units += free;
    }
    if (variant_ == Variant::local) return uncovered_ <= cs_.cap(units);
    // union: per layer, vertices still needing edges that the layer leaves free
    std::int64_t total = 0;
    for (int L = 0; L < k_; ++L) {
      std::int64_t f = 0;
      for (int v = 0; v < h_.n(); ++v)
        if (rem_[v] > 0 && (L >= used_layers_ || !occ_[L].test(v))) ++f;
      total += cs_.cap(f);
    }
    return uncovered_ <= total;
  }

  void apply(int ci, std::vector<int> &newly) {
    const auto &c = cs_.cands[ci];
    c.edges.for_each([&](int id) {
      if (!covered_.test(id)) {
        covered_.set(id);
        newly.push_back(id);
        --rem_[h_.edge(id).u];
        --rem_[h_.edge(id).v];
      }
    });
    uncovered_ -= static_cast<int>(newly.size());
  }
  void undo(const std::vector<int> &newly) {
    for (int id : newly) {
      covered_.reset(id);
      ++rem_[h_.edge(id).u];
      ++rem_[h_.edge(id).v];
    }
    uncovered_ += static_cast<int>(newly.size());
  }

  bool dfs() {
    if (uncovered_ == 0) return true;
    if (!meter_.tick()) return false;
    if (variant_ == Variant::global && static_cast<int>(chosen_.size()) >= k_) return false;
    if (!bounded()) return false;
    // most constrained uncovered edge
    int best = -1;
    std::size_t best_opts = 0;
    for (int id = 0; id < h_.m(); ++id) {
      if (covered_.test(id)) continue;
      std::size_t opts = 0;
      for (int ci : cs_.by_edge[id]) {
        if (variant_ == Variant::union_) {
          for (int L = 0; L < std::min(used_layers_ + 1, k_); ++L)
            if (fits(cs_.cands[ci], L)) ++opts;
        } else if (fits(cs_.cands[ci], 0)) {
          ++opts;
        }
      }
      if (opts == 0) return false;
      if (best < 0 || opts < best_opts) best = id, best_opts = opts;
    }
    for (int ci : cs_.by_edge[best]) {
      const auto &c = cs_.cands[ci];
      int layers = variant_ == Variant::union_ ? std::min(used_layers_ + 1, k_) : 1;
      for (int L = 0; L < layers; ++L) {
        if (!fits(c, L)) continue;
        std::vector<int> newly;
        apply(ci, newly);
        chosen_.push_back(ci);
        bool opened = false;
        if (variant_ == Variant::union_) {
          occ_[L] |= c.verts;
          layer_of_.push_back(L);
          if (L == used_layers_) ++used_layers_, opened = true;
        } else if (variant_ == Variant::local) {
          c.verts.for_each([&](int v) { ++load_[v]; });
        }
        if (dfs()) return true;
        if (variant_ == Variant::union_) {
          occ_[L].subtract(c.verts);
          layer_of_.pop_back();
          if (opened) --used_layers_;
        } else if (variant_ == Variant::local) {
          c.verts.for_each([&](int v) { --load_[v]; });
        }
        chosen_.pop_back();
        undo(newly);
        if (meter_.exhausted) return false;
      }
    }
    return false;
  }
};

// ---------------------------------------------------------------------------
// Edge-partition engine (monotone classes): every cover can be trimmed to a
// partition of the host edges into members.

class PartitionSearch {
public:
  PartitionSearch(const Graph &host, const GuestClass &cls, Variant variant, Meter &meter)
      : h_(host), cls_(cls), variant_(variant), meter_(meter), order_(colex_edge_order(host)) {
    dstar_ = star_degree_bound(cls, std::max(1, host.max_degree()));
    pos_.assign(h_.m(), 0);
    for (int k = 0; k < h_.m(); ++k) pos_[order_[k]] = k;
  }

  Outcome run(int k, Cover *out) {
    k_ = k;
    parts_.clear();
    load_.assign(h_.n(), 0);
    rem_.assign(h_.n(), 0);
    for (int v = 0; v < h_.n(); ++v) rem_[v] = h_.degree(v);
    if (dfs(0)) {
      std::vector<CoverGuest> guests;
      std::optional<std::vector<std::vector<int>>> layers;
      if (variant_ == Variant::union_) layers.emplace();
      for (const auto &p : parts_) {
        VertexMap map;
        Graph g = edges_graph(h_, p.edges, &map);
        if (variant_ != Variant::union_) {
          guests.push_back({g, map});
          continue;
        }
        auto groups = closure_grouping(cls_, g);
        layers->emplace_back();
        for (const auto &grp : *groups) {
          VertexMap sub;
          for (int x : grp) sub.push_back(map[x]);
          layers->back().push_back(static_cast<int>(guests.size()));
          guests.push_back({induced_subgraph(g, grp), sub});
        }
      }
      *out = finalize_cover(h_, std::move(guests), "", std::move(layers));
      return Outcome::found;
    }
    return meter_.exhausted ? Outcome::exhausted : Outcome::infeasible;
  }

private:
  struct Part {
    Bitset verts;
    std::vector<int> edges;
    std::vector<int> deg; // per host vertex
  };
  const Graph &h_;
  const GuestClass &cls_;
  Variant variant_;
  Meter &meter_;
  std::vector<int> order_, pos_;
  int k_ = 0, dstar_ = 1;
  std::vector<Part> parts_;
  std::vector<int> load_, rem_;

  bool accepts(const Part &p) const {
    Graph g = edges_graph(h_, p.edges, nullptr);
    return variant_ == Variant::union_ ? union_closure_membership(cls_, g) : membership(cls_, g);
  }

  bool can_take(const Part &p, int v) const { return p.verts.test(v) || variant_ != Variant::local || load_[v] < k_; }

  bool bounded(int from) const {
    // each part gives a vertex at most dstar edges
    for (int v = 0; v < h_.n(); ++v) {
      if (rem_[v] == 0) continue;
      long room = 0;
      for (const auto &p : parts_)
        if (p.verts.test(v) || (variant_ != Variant::local))
          room += dstar_ - p.deg[v];
      if (variant_ == Variant::local)
        room += static_cast<long>(k_ - load_[v]) * dstar_;
      else
        room += static_cast<long>(k_ - static_cast<int>(parts_.size())) * dstar_;
      if (rem_[v] > room) return false;
    }
    if (variant_ != Variant::local) return true;
    // every remaining edge needs some option
    for (int k = from; k < h_.m(); ++k) {
      Edge e = h_.edge(order_[k]);
      if (load_[e.u] < k_ && load_[e.v] < k_) continue;
      bool ok = false;
      for (const auto &p : parts_)
        if ((p.verts.test(e.u) || p.verts.test(e.v)) && can_take(p, e.u) && can_take(p, e.v)) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    return true;
  }

  void add(Part &p, int id) {
    Edge e = h_.edge(id);
    for (int x : {e.u, e.v}) {
      if (!p.verts.test(x)) {
        p.verts.set(x);
        ++load_[x];
      }
      ++p.deg[x];
      --rem_[x];
    }
    p.edges.push_back(id);
  }
  void remove(Part &p, int id) {
    Edge e = h_.edge(id);
    p.edges.pop_back();
    for (int x : {e.u, e.v}) {
      --p.deg[x];
      ++rem_[x];
      if (p.deg[x] == 0) {
        p.verts.reset(x);
        --load_[x];
      }
    }
  }

  bool dfs(int k) {
    if (k == h_.m()) return true;
    if (!meter_.tick()) return false;
    if (!bounded(k)) return false;
    const int id = order_[k];
    Edge e = h_.edge(id);
    for (std::size_t pi = 0; pi < parts_.size(); ++pi) {
      Part &p = parts_[pi];
      if (!can_take(p, e.u) || !can_take(p, e.v)) continue;
      if (p.deg[e.u] >= dstar_ || p.deg[e.v] >= dstar_) continue;
      add(p, id);
      if (accepts(p) && dfs(k + 1)) return true;
      remove(parts_[pi], id);
      if (meter_.exhausted) return false;
    }
    bool room = variant_ == Variant::local ? (load_[e.u] < k_ && load_[e.v] < k_)
                                           : static_cast<int>(parts_.size()) < k_;
    if (!room) return false;
    parts_.push_back({Bitset(h_.n()), {}, std::vector<int>(h_.n(), 0)});
    add(parts_.back(), id);
    if (dfs(k + 1)) return true;
    remove(parts_.back(), id);
    parts_.pop_back();
    return false;
  }
};

// ---------------------------------------------------------------------------
// Split search (folded): build the guest graph F copy by copy. Each host
// vertex gets at most s copies, each host edge one or more copy pairs, and F
// must lie in the union closure of the class.

class SplitSearch {
public:
  SplitSearch(const Graph &host, const GuestClass &cls, Meter &meter, int mult_cap, bool repetition)
      : h_(host), cls_(cls), meter_(meter), mult_cap_(mult_cap), repetition_(repetition),
        order_(colex_edge_order(host)) {
    last_.assign(h_.n(), -1);
    for (int k = 0; k < h_.m(); ++k) {
      Edge e = h_.edge(order_[k]);
      last_[e.u] = last_[e.v] = k;
    }
    if (cls.flags.monotone) dstar_ = star_degree_bound(cls, std::max(1, host.max_degree()));
  }

  Outcome run(int s, Cover *out) {
    s_ = s;
    cap_ = mult_cap_ > 0 ? std::min(mult_cap_, s) : s;
    owner_.clear();
    fadj_.clear();
    copies_.assign(h_.n(), {});
    rem_.assign(h_.n(), 0);
    for (int v = 0; v < h_.n(); ++v) rem_[v] = h_.degree(v);
    if (dfs(0)) {
      *out = certificate();
      return Outcome::found;
    }
    return meter_.exhausted ? Outcome::exhausted : Outcome::infeasible;
  }

private:
  const Graph &h_;
  const GuestClass &cls_;
  Meter &meter_;
  int mult_cap_;
  bool repetition_;
  std::vector<int> order_, last_;
  int s_ = 0, cap_ = 0, dstar_ = 1 << 20;
  std::vector<int> owner_;               // copy -> host vertex
  std::vector<std::vector<int>> fadj_;   // copy adjacency
  std::vector<std::vector<int>> copies_; // host vertex -> copies
  std::vector<int> rem_;

  Graph f_graph() const {
    std::vector<Edge> es;
    for (int a = 0; a < static_cast<int>(fadj_.size()); ++a)
      for (int b : fadj_[a])
        if (a < b) es.push_back({a, b});
    return Graph(static_cast<int>(owner_.size()), es);
  }

  Cover certificate() const {
    Graph f = f_graph();
    auto groups = closure_grouping(cls_, f);
    std::vector<CoverGuest> guests;
    for (const auto &grp : *groups) {
      VertexMap map;
      for (int x : grp) map.push_back(owner_[x]);
      guests.push_back({induced_subgraph(f, grp), map});
    }
    return finalize_cover(h_, std::move(guests), "");
  }

  std::vector<int> component_of(int start) const {
    std::vector<int> comp{start};
    std::vector<bool> seen(owner_.size(), false);
    seen[start] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int y : fadj_[comp[i]])
        if (!seen[y]) {
          seen[y] = true;
          comp.push_back(y);
        }
    std::sort(comp.begin(), comp.end());
    return comp;
  }

  bool component_ok(int copy, int k) const {
    auto comp = component_of(copy);
    std::vector<int> pos(owner_.size(), -1);
    for (std::size_t i = 0; i < comp.size(); ++i) pos[comp[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    bool finished = true;
    for (int a : comp) {
      if (last_[owner_[a]] > k) finished = false;
      for (int b : fadj_[a])
        if (a < b) es.push_back({pos[a], pos[b]});
    }
    Graph g(static_cast<int>(comp.size()), es);
    if (finished && cls_.flags.component_closed) return membership(cls_, g);
    return could_extend(cls_, g);
  }

  bool bounded() const {
    for (int v = 0; v < h_.n(); ++v) {
      if (rem_[v] == 0) continue;
      long room = static_cast<long>(cap_ - static_cast<int>(copies_[v].size())) * dstar_;
      for (int c : copies_[v]) room += dstar_ - static_cast<int>(fadj_[c].size());
      if (rem_[v] > room) return false;
    }
    return true;
  }

  bool dfs(int k) {
    if (k == h_.m()) return union_closure_membership(cls_, f_graph());
    if (!meter_.tick()) return false;
    if (!bounded()) return false;
    Edge e = h_.edge(order_[k]);
    // available copies: existing ones, then new ones (used as a prefix)
    auto avail = [&](int v) {
      std::vector<int> a = copies_[v];
      int fresh = cap_ - static_cast<int>(copies_[v].size());
      for (int j = 0; j < fresh; ++j) a.push_back(-1 - j);
      return a;
    };
    auto au = avail(e.u), av = avail(e.v);
    std::vector<std::pair<int, int>> pairs;
    for (int a : au)
      for (int b : av) pairs.push_back({a, b});
    const int P = static_cast<int>(pairs.size());
    const int max_pick = repetition_ ? P : 1;
    // subsets by size, then lexicographic
    std::vector<int> pick;
    for (int size = 1; size <= max_pick; ++size) {
      pick.assign(size, 0);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        if (try_pairs(k, e, pairs, pick)) return true;
        if (meter_.exhausted) return false;
        int i = size - 1;
        while (i >= 0 && pick[i] == P - size + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    return false;
  }

  bool try_pairs(int k, Edge e, const std::vector<std::pair<int, int>> &pairs, const std::vector<int> &pick) {
    // new copies must be used as a prefix -1, -2, ...
    auto prefix_ok = [&](bool first) {
      int most = 0;
      std::set<int> used;
      for (int i : pick) {
        int x = first ? pairs[i].first : pairs[i].second;
        if (x < 0) used.insert(-x);
      }
      for (int x : used) most = std::max(most, x);
      return static_cast<int>(used.size()) == most;
    };
    if (!prefix_ok(true) || !prefix_ok(false)) return false;
    std::map<int, int> made_u, made_v;
    auto resolve = [&](int x, int host_v, std::map<int, int> &made) {
      if (x >= 0) return x;
      auto it = made.find(x);
      if (it != made.end()) return it->second;
      int id = static_cast<int>(owner_.size());
      owner_.push_back(host_v);
      fadj_.emplace_back();
      copies_[host_v].push_back(id);
      made[x] = id;
      return id;
    };
    std::vector<std::pair<int, int>> added;
    for (int i : pick) {
      int a = resolve(pairs[i].first, e.u, made_u);
      int b = resolve(pairs[i].second, e.v, made_v);
      fadj_[a].push_back(b);
      fadj_[b].push_back(a);
      added.push_back({a, b});
    }
    --rem_[e.u];
    --rem_[e.v];
    bool ok = true;
    for (auto [a, b] : added) {
      if (dstar_ < (1 << 20) &&
          (static_cast<int>(fadj_[a].size()) > dstar_ || static_cast<int>(fadj_[b].size()) > dstar_))
        ok = false;
    }
    if (ok)
      for (auto [a, b] : added) {
        if (!component_ok(a, k)) {
          ok = false;
          break;
        }
        (void)b;
      }
    if (ok && dfs(k + 1)) return true;
    ++rem_[e.u];
    ++rem_[e.v];
    for (auto it = added.rbegin(); it != added.rend(); ++it) {
      fadj_[it->first].pop_back();
      fadj_[it->second].pop_back();
    }
    // drop created copies (they are the most recent ids)
    int created = static_cast<int>(made_u.size() + made_v.size());
    for (int j = 0; j < created; ++j) {
      int id = static_cast<int>(owner_.size()) - 1;
      copies_[owner_[id]].pop_back();
      owner_.pop_back();
      fadj_.pop_back();
    }
    return false;
  }
};

// ---------------------------------------------------------------------------

std::string range_text(int lo, int hi) {
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

// Trivial covers by single edges.
Cover k2_cover(const Graph &host, Variant variant) {
  std::vector<CoverGuest> guests;
  for (auto e : host.edges()) guests.push_back({complete_graph(2), {e.u, e.v}});
  std::optional<std::vector<std::vector<int>>> layers;
  if (variant == Variant::union_) {
    // greedy proper edge colouring: each colour class is a matching
    std::vector<std::vector<int>> cls;
    std::vector<Bitset> used;
    for (int id = 0; id < host.m(); ++id) {
      Edge e = host.edge(id);
      std::size_t c = 0;
      while (c < used.size() && (used[c].test(e.u) || used[c].test(e.v))) ++c;
      if (c == used.size()) {
        used.emplace_back(host.n());
        cls.emplace_back();
      }
      used[c].set(e.u);
      used[c].set(e.v);
      cls[c].push_back(id);
    }
    layers = cls;
  }
  return finalize_cover(host, std::move(guests), "", std::move(layers));
}

int objective(const Cover &c, Variant v) {
  return v == Variant::global || v == Variant::union_ ? measured_globality(c) : measured_locality(c);
}

SolveResult solve_impl(const Graph &host, const GuestClass &cls, Variant variant, const SolveBudget &budget,
                       Meter &meter, int depth);

// For hereditary classes an induced subgraph never needs more (restriction of
// covers); used to lift lower bounds before searching.
std::optional<std::pair<int, std::string>> induced_lower_bound(const Graph &host, const GuestClass &cls,
                                                               Variant variant, const SolveBudget &budget,
                                                               Meter &meter, int depth) {
  if (!cls.flags.hereditary || host.n() <= 3 || host.n() > 12 || depth > 12) return std::nullopt;
  int drop = 0;
  for (int v = 1; v < host.n(); ++v)
    if (host.degree(v) < host.degree(drop)) drop = v;
  std::vector<int> keep;
  for (int v = 0; v < host.n(); ++v)
    if (v != drop) keep.push_back(v);
  Graph sub = induced_subgraph(host, keep);
  if (sub.m() == 0) return std::nullopt;
  SolveResult r = solve_impl(sub, cls, variant, budget, meter, depth + 1);
  if (!r.decided && r.lower <= 1) return std::nullopt;
  int lb = r.decided ? r.value : r.lower;
  return std::pair(lb, "the induced subgraph without vertex " + std::to_string(drop) + " needs " +
                           std::to_string(lb) + " (class is hereditary, so covers restrict)");
}

SolveResult solve_impl(const Graph &host, const GuestClass &cls, Variant variant, const SolveBudget &budget,
                       Meter &meter, int depth) {
  SolveResult res;
  if (host.m() == 0) {
    res.decided = true;
    res.value = 0;
    res.upper = 0;
    res.certificate = finalize_cover(host, {}, cls.name);
    res.lower_bound_proof = "host has no edges";
    res.method = "trivial";
    return res;
  }
  res.lower = 1;

  // whole host is a member (or, for union/local/folded, in the union closure)
  {
    VertexMap map;
    std::vector<int> all(host.m());
    std::iota(all.begin(), all.end(), 0);
    Graph core = edges_graph(host, all, &map);
    std::optional<Cover> one;
    if (variant == Variant::global) {
      if (membership(cls, core)) one = finalize_cover(host, {{core, map}}, cls.name);
    } else if (auto groups = closure_grouping(cls, core)) {
      std::vector<CoverGuest> guests;
      for (const auto &grp : *groups) {
        VertexMap sub;
        for (int x : grp) sub.push_back(map[x]);
        guests.push_back({induced_subgraph(core, grp), sub});
      }
      std::vector<int> layer(guests.size());
      std::iota(layer.begin(), layer.end(), 0);
      std::optional<std::vector<std::vector<int>>> layers;
      if (variant == Variant::union_) layers = std::vector<std::vector<int>>{layer};
      one = finalize_cover(host, std::move(guests), cls.name, std::move(layers));
    }
    if (one) {
      res.decided = true;
      res.value = 1;
      res.upper = 1;
      res.certificate = one;
      res.lower_bound_proof = "host has an edge";
      res.method = "host is covered by itself";
      return res;
    }
  }

  // folded covers of classes that fold back to injective ones
  if (variant == Variant::folded && cls.folds_to_injective) {
    SolveResult r = solve_impl(host, cls, Variant::local, budget, meter, depth);
    r.method = "folded = local (" + r.method + ")";
    r.lower_bound_proof = "every member component is a clique or a star whose smaller stars are members, so a "
                          "folded guest can be replaced by its image without raising locality; local bound: " +
                          r.lower_bound_proof;
    return r;
  }

  // Without K2 in the class there is no trivial cover; a minimal cover still
  // has at most m guests, so m bounds every variant when a cover exists.
  const bool has_k2 = membership(cls, complete_graph(2));
  std::optional<Cover> best;
  int upper = host.m() + 1;
  if (has_k2) {
    best = k2_cover(host, variant == Variant::folded ? Variant::local : variant);
    best->claims.class_name = cls.name;
    upper = objective(*best, variant);
  }
  std::string proof = "host has an edge and is not covered by a single guest";

  // engine selection
  std::function<Outcome(int, Cover *)> feasible;
  std::optional<CandidateSet> cset;
  std::optional<CandidateSearch> csearch;
  std::optional<PartitionSearch> psearch;
  std::optional<SplitSearch> ssearch;
  bool use_partition = false;
  if (variant == Variant::folded) {
    bool rep = budget.edge_repetition.value_or(!cls.flags.monotone);
    res.edge_repetition = rep;
    res.multiplicity_cap = budget.multiplicity_cap;
    ssearch.emplace(host, cls, meter, budget.multiplicity_cap, rep);
    res.method = std::string("split search") + (rep ? " with edge repetition" : "");
    feasible = [&](int k, Cover *out) { return ssearch->run(k, out); };
  } else {
    if (variant != Variant::local && cls.flags.monotone) use_partition = true;
    if (!use_partition && cls.has_enumerator()) {
      try {
        cset = build_candidates(host, cls.enumerator(host), variant);
        res.method = "candidate search over " + std::to_string(cset->cands.size()) + " guests";
      } catch (const EnumerationLimit &) {
        if (!cls.flags.monotone) throw;
        use_partition = true;
      }
    }
    if (!use_partition && !cset) {
      if (cls.flags.monotone)
        use_partition = true;
      else
        throw UnsupportedClass("class " + cls.name + " has no candidate enumerator and is not monotone; the " +
                               variant_name(variant) + " variant is unsupported");
    }
    if (use_partition) {
      psearch.emplace(host, cls, variant, meter);
      res.method = "edge-partition search";
      feasible = [&](int k, Cover *out) { return psearch->run(k, out); };
    } else {
      csearch.emplace(*cset, variant, meter);
      feasible = [&](int k, Cover *out) { return csearch->run(k, out); };
    }
  }

  int lower = 2;
  if (cset && cset->max_edges > 0 && variant == Variant::global) {
    int lb = (host.m() + cset->max_edges - 1) / cset->max_edges;
    if (lb > lower) {
      lower = lb;
      proof = "every guest covers at most " + std::to_string(cset->max_edges) + " of the " +
              std::to_string(host.m()) + " edges";
    }
  }
  if (variant == Variant::local && use_partition == false && cset) {
    if (auto ilb = induced_lower_bound(host, cls, variant, budget, meter, depth); ilb && ilb->first > lower) {
      lower = ilb->first;
      proof = ilb->second;
    }
  }
  lower = std::min(lower, upper);

  const int first = lower;
  for (int k = lower; k < upper; ++k) {
    Cover c;
    Outcome o = feasible(k, &c);
    if (o == Outcome::found) {
      c.claims.class_name = cls.name;
      best = c;
      upper = k;
      break;
    }
    if (o == Outcome::exhausted) {
      res.decided = false;
      res.lower = k;
      if (best) res.upper = upper;
      res.certificate = best;
      res.lower_bound_proof = k > first ? proof + "; exhaustive " + res.method + " refutes " + range_text(first, k - 1)
                                        : proof;
      return res;
    }
  }
  if (upper > first) proof += "; exhaustive " + res.method + " refutes " + range_text(first, upper - 1);
  if (!best) {
    res.decided = false;
    res.lower = upper;
    res.lower_bound_proof = "no cover exists: " + proof;
    res.method += " (no cover by this class)";
    return res;
  }
  res.decided = true;
  res.value = upper;
  res.lower = upper;
  res.upper = upper;
  res.certificate = best;
  res.lower_bound_proof = proof;
  return res;
}

} // namespace

const char *variant_name(Variant v) {
  switch (v) {
  case Variant::global: return "global";
  case Variant::union_: return "union";
  case Variant::local: return "local";
  case Variant::folded: return "folded";
  }
  return "?";
}

std::optional<Variant> parse_variant(const std::string &s) {
  if (s == "global") return Variant::global;
  if (s == "union") return Variant::union_;
  if (s == "local") return Variant::local;
  if (s == "folded") return Variant::folded;
  return std::nullopt;
}

SolveResult solve(const Graph &host, const GuestClass &cls, Variant variant, const SolveBudget &budget) {
  if (budget.node_limit == 0 || budget.time_limit <= 0 || budget.multiplicity_cap < 0)
    throw std::invalid_argument("budget caps must be positive");
  Meter meter{budget.node_limit, budget.time_limit};
  SolveResult r = solve_impl(host, cls, variant, budget, meter, 0);
  r.nodes = meter.nodes;
  r.seconds = meter.elapsed();
  if (r.certificate) r.certificate->claims.class_name = cls.name;
  return r;
}

ChainReport chain_check(const Graph &host, const GuestClass &cls, const SolveBudget &budget) {
  ChainReport rep;
  rep.global = solve(host, cls, Variant::global, budget);
  rep.union_ = solve(host, cls, Variant::union_, budget);
  rep.local = solve(host, cls, Variant::local, budget);
  rep.folded = solve(host, cls, Variant::folded, budget);
  const SolveResult *vals[4] = {&rep.global, &rep.union_, &rep.local, &rep.folded};
  const char *names[4] = {"global", "union", "local", "folded"};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      if (!vals[a]->decided || !vals[b]->decided) continue;
      if (vals[a]->value < vals[b]->value) {
        rep.holds = false;
        rep.violations.push_back(std::string(names[a]) + " " + std::to_string(vals[a]->value) + " < " + names[b] +
                                 " " + std::to_string(vals[b]->value));
      }
    }
  return rep;
}

namespace {

// Pattern split into a core (degree >= 2 vertices; K1 and K2 components kept
// whole) and the number of leaves each core vertex carries.
struct CoreComponent {
  Graph core;
  std::vector<int> demand;
};

std::vector<CoreComponent> core_components(const Graph &g) {
  std::vector<CoreComponent> out;
  for (const auto &comp : components(g)) {
    Graph c = induced_subgraph(g, comp);
    std::vector<int> keep;
    if (c.n() <= 2) {
      for (int x = 0; x < c.n(); ++x) keep.push_back(x);
    } else {
      for (int x = 0; x < c.n(); ++x)
        if (c.degree(x) >= 2) keep.push_back(x);
    }
    CoreComponent cc;
    cc.core = induced_subgraph(c, keep);
    for (int x : keep) {
      int d = 0;
      if (c.n() > 2)
        for (int y : c.neighbors(x)) d += c.degree(y) == 1;
      cc.demand.push_back(d);
    }
    out.push_back(std::move(cc));
  }
  return out;
}

// All injective edge-preserving maps of a core component, filtered by the
// degree the leaves need.
std::vector<VertexMap> core_maps(const CoreComponent &cc, const Graph &host, std::size_t limit) {
  const Graph &p = cc.core;
  std::vector<VertexMap> out;
  // order: BFS from vertex 0 so each later vertex has a placed neighbour
  std::vector<int> order{0};
  std::vector<bool> seen(p.n(), false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int y : p.neighbors(order[i]))
      if (!seen[y]) seen[y] = true, order.push_back(y);
  VertexMap map(p.n(), -1);
  std::vector<bool> used(host.n(), false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (out.size() >= limit) return;
    if (i == order.size()) {
      out.push_back(map);
      return;
    }
    int x = order[i];
    auto try_v = [&](int v) {
      if (used[v] || host.degree(v) < p.degree(x) + cc.demand[x]) return;
      for (int y : p.neighbors(x))
        if (map[y] >= 0 && !host.adjacent(map[y], v)) return;
      map[x] = v;
      used[v] = true;
      rec(i + 1);
      used[v] = false;
      map[x] = -1;
    };
    int anchor = -1;
    for (int y : p.neighbors(x))
      if (map[y] >= 0) anchor = map[y];
    if (anchor >= 0)
      for (int v : host.neighbors(anchor)) try_v(v);
    else
      for (int v = 0; v < host.n(); ++v) try_v(v);
  };
  if (p.n() > 0) rec(0);
  return out;
}

// Can every leaf slot get its own host neighbour outside the core image?
bool leaves_fit(const Graph &host, const std::vector<std::pair<int, int>> &slots_at, const Bitset &image) {
  std::vector<int> slot_owner; // host vertex each slot hangs on
  for (auto [v, d] : slots_at)
    for (int k = 0; k < d; ++k) slot_owner.push_back(v);
  std::vector<int> match_of(host.n(), -1);
  for (int s = 0; s < static_cast<int>(slot_owner.size()); ++s) {
    std::vector<bool> vis(host.n(), false);
    std::function<bool(int)> aug = [&](int slot) -> bool {
      for (int w : host.neighbors(slot_owner[slot])) {
        if (image.test(w) || vis[w]) continue;
        vis[w] = true;
        if (match_of[w] < 0 || aug(match_of[w])) {
          match_of[w] = slot;
          return true;
        }
      }
      return false;
    };
    if (!aug(s)) return false;
  }
  return true;
}

struct CoreCopies {
  std::size_t count = 0;
  std::vector<int> image; // first core image found, sorted vertices
};

CoreCopies count_core_copies(const Graph &guest, const Graph &host, std::size_t cap) {
  auto comps = core_components(guest);
  std::vector<std::vector<VertexMap>> maps;
  for (const auto &cc : comps) maps.push_back(core_maps(cc, host, 1'000'000));
  // components equal as labelled graphs with equal demands are interchangeable
  std::vector<bool> same_as_prev(comps.size(), false);
  for (std::size_t c = 1; c < comps.size(); ++c)
    same_as_prev[c] = comps[c].core == comps[c - 1].core && comps[c].demand == comps[c - 1].demand;
  std::set<std::pair<std::vector<int>, std::vector<int>>> images;
  CoreCopies res;
  std::vector<int> pick(comps.size(), -1);
  Bitset used(host.n());
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (images.size() > cap) return;
    if (c == comps.size()) {
      std::vector<std::pair<int, int>> slots;
      std::vector<int> verts, edges;
      for (std::size_t j = 0; j < comps.size(); ++j) {
        const auto &m = maps[j][pick[j]];
        for (int x = 0; x < comps[j].core.n(); ++x) {
          verts.push_back(m[x]);
          if (comps[j].demand[x] > 0) slots.push_back({m[x], comps[j].demand[x]});
        }
        auto es = image_edges(comps[j].core, host, m);
        edges.insert(edges.end(), es.begin(), es.end());
      }
      if (!leaves_fit(host, slots, used)) return;
      std::sort(verts.begin(), verts.end());
      std::sort(edges.begin(), edges.end());
      if (images.insert({verts, edges}).second && images.size() == 1) res.image = verts;
      return;
    }
    int from = same_as_prev[c] ? pick[c - 1] + 1 : 0;
    for (int i = from; i < static_cast<int>(maps[c].size()); ++i) {
      const auto &m = maps[c][i];
      bool ok = true;
      for (int v : m) ok = ok && !used.test(v);
      if (!ok) continue;
      for (int v : m) used.set(v);
      pick[c] = i;
      rec(c + 1);
      for (int v : m) used.reset(v);
    }
  };
  rec(0);
  res.count = images.size();
  return res;
}

} // namespace

UniqueCopiesResult lower_bound_unique_copies(const Graph &host, const std::vector<Graph> &special) {
  UniqueCopiesResult res;
  const int k = static_cast<int>(special.size());
  auto &tr = res.trace;
  tr.guests.resize(k);
  tr.witnesses.assign(k, std::vector<int>(k, -1));
  if (k == 0) {
    res.refusal = "no special guests";
    return res;
  }
  std::vector<Bitset> img(k, Bitset(host.n()));
  for (int i = 0; i < k; ++i) {
    auto cc = count_core_copies(special[i], host, 2);
    tr.guests[i].core_copies = cc.count;
    tr.guests[i].core_image = cc.image;
    int demand = 0;
    for (const auto &c : core_components(special[i]))
      for (int d : c.demand) demand += d;
    tr.guests[i].pendant_demand = demand;
    if (cc.count != 1) {
      res.refusal = "guest " + std::to_string(i) + " has " + (cc.count == 0 ? "no copy" : "several copies") +
                    " in the host";
      return res;
    }
    for (int v : cc.image) img[i].set(v);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Bitset both = img[i];
      bool found = false;
      img[i].for_each([&](int v) {
        if (!found && img[j].test(v)) {
          tr.witnesses[i][j] = tr.witnesses[j][i] = v;
          found = true;
        }
      });
      if (!found) {
        res.refusal = "copies of guests " + std::to_string(i) + " and " + std::to_string(j) + " are disjoint";
        return res;
      }
    }
  // Pendant edges at a vertex of guest i's core that lies in no other core:
  // a copy of another guest cannot use them, so they are covered by guest i
  // or each by its own K2 through that vertex.
  for (int i = 0; i < k; ++i) {
    auto &g = tr.guests[i];
    for (int v : g.core_image) {
      bool own = true;
      for (int j = 0; j < k; ++j) own = own && (j == i || !img[j].test(v));
      if (!own) continue;
      std::vector<int> pend;
      for (std::size_t a = 0; a < host.neighbors(v).size(); ++a) {
        int w = host.neighbors(v)[a];
        bool other = false;
        for (int j = 0; j < k; ++j) other = other || img[j].test(w);
        if (host.degree(w) == 1 && !other) pend.push_back(host.incident(v)[a]);
      }
      if (static_cast<int>(pend.size()) >= k) {
        g.pendant_vertex = v;
        g.pendant_edges = pend;
        break;
      }
    }
    if (g.pendant_vertex < 0) {
      res.refusal = "guest " + std::to_string(i) + " has no core vertex with " + std::to_string(k) +
                    " pendant edges that only it can cover";
      return res;
    }
  }
  res.certified = true;
  res.bound = k;
  return res;
}

} // namespace gulf
